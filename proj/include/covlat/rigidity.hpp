#pragma once

#include <functional>

#include "covlat/linalg.hpp"

namespace covlat {

// Linear constraint system on the d(d+1)/2-dimensional space of symmetric
// matrices C = (c_ij), generated by the orthogonality relations the cross
// polytopes force on any form sharing their Delone cells:
//   c_ii - c_jj = 0                                   (i < j)
//   c_ik + s1 c_il + s2 c_jk + s1 s2 c_jl = 0         (i,j,k,l distinct)
// The second family linearizes v^t C w = 0 over the orthogonal norm-4 pairs
// v = ±e_i±e_j, w = ±e_k±e_l (for the Leech lattice these are the vectors of
// shape (1/sqrt8)((±4)^2 0^22), for E8 the shape ((±1)^2 0^6) pairs).
struct RigiditySystem {
    int d = 0;
    RatMat rows;  // over columns indexed by pairs (i <= j)
};

RigiditySystem build_system(int d);

// Streams the system row by row without materializing dense vectors.
void for_each_constraint_row(int d,
                             const std::function<void(const RowEliminator::SparseRow&)>& fn);

struct RigidityResult {
    int dimension = 0;
    int nullspace_dim = 0;
    bool basis_is_identity = false;  // solution space spanned by the identity
};

RigidityResult solution_space(const RigiditySystem& s);

// Streaming variant of build_system + solution_space (the d = 24 system has
// 127788 rows; only a few thousand are needed before the rank saturates).
RigidityResult rigidity_verdict(int d);

// Column index of entry (i, j), i <= j, in the flattened symmetric space.
int sym_index(int d, int i, int j);

}  // namespace covlat
