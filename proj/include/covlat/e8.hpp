#pragma once

#include <map>
#include <string>

#include "covlat/qform.hpp"

namespace covlat {

// The root lattice in the half-integer coordinate system: points of
// Z^8 union (1/2 + Z)^8 with even coordinate sum. In these coordinates the
// ambient inner product is the standard one, so the lattice's own form is
// the identity matrix; `gram` is the Gram matrix of the fixed basis
// (2e1, e2-e1, ..., e7-e6, (1/2,...,1/2)) used for integer-coordinate work.
class E8Model {
  public:
    static const E8Model& instance();

    const RatMat& basis() const { return basis_; }
    const PQF& gram() const { return gram_; }

    bool contains(const RatVec& x) const;   // standard coordinates
    RatVec to_basis(const RatVec& x) const;
    RatVec from_basis(const RatVec& c) const;

    // Standard-coordinate shell of the given squared length (cached).
    const std::vector<RatVec>& shell_std(long norm) const;

  private:
    E8Model();
    RatMat basis_;
    RatMat basis_inv_;
    PQF gram_ = PQF::trusted(SymMatrix::identity(8));
    mutable std::map<long, std::vector<RatVec>> shells_;
};

// ---------------------------------------------------------------------------
// diagonal classes of the norm-4 shell modulo 2L

enum class DiagonalClassType { axis, quadruple, halfinteger };

struct DiagonalClass {
    RatVec representative;        // lexicographically largest member
    std::vector<RatVec> members;  // 16 vectors forming 8 antipodal pairs
    DiagonalClassType type;
};

// Exactly 135 classes in deterministic order (type counts 1 / 70 / 64).
std::vector<DiagonalClass> diagonal_classes(const E8Model& model);

// ---------------------------------------------------------------------------
// Delone cells

struct CrossPolytopeE8 {
    // vertices[0] = 0, vertices[8] = w, vertices[j] + vertices[j+8] = w
    // (indices mod 16); all 8 diagonals have squared length 4.
    std::vector<RatVec> vertices;
    RatVec center;  // w/2, squared circumradius 1
};

CrossPolytopeE8 cross_polytope(const E8Model& model, const RatVec& w);

struct DeloneSimplexE8 {
    std::vector<RatVec> vertices;  // 9 points, 36 edges of norm 2
    RatVec center;                 // circumcenter, squared radius 8/9
};

// The 17280 origin-incident Delone simplices.
std::vector<DeloneSimplexE8> simplices_of_subdivision(const E8Model& model);
// 1920 translation classes, lexicographically smallest vertex at the origin.
std::vector<DeloneSimplexE8> simplex_representatives(const E8Model& model);

// Adjacency of two origin-incident Delone cells, decided by the inner
// product of their centers (5/6 for simplex/cross polytope, 3/4 for two
// cross polytopes; simplices never share a facet with simplices).
struct E8Cell {
    bool is_simplex;
    RatVec center;
};
bool adjacent_cells(const E8Model& model, const E8Cell& a, const E8Cell& b);

// ---------------------------------------------------------------------------
// orbits of the norm-4 shell under G = <permutations of the last seven
// coordinates, global negation>

struct GOrbit {
    int id;                        // 1..20, catalogue order
    RatVec representative;         // catalogue representative
    long pair_count;               // antipodal pairs in the orbit
    std::vector<RatVec> members;   // 2 * pair_count vectors
};

std::vector<GOrbit> g_orbits(const E8Model& model);

// ---------------------------------------------------------------------------
// periodic triangulations refining the Delone subdivision

struct PeriodicTriangulation {
    std::vector<int> orbit_selection;       // sorted orbit ids
    std::vector<RatVec> diagonal_of_class;  // chosen diagonal, aligned with diagonal_classes()
};

// All lattice-periodic G-invariant refining triangulations: orbit
// selections whose vectors meet every diagonal class in exactly one
// antipodal pair. Exactly four exist.
std::vector<PeriodicTriangulation> candidate_triangulations(const E8Model& model);

// True when the strict type-3 regulator system of t admits a solution
// (exact LP feasibility inside the G-invariant parameter space).
bool delone_feasible(const E8Model& model, const PeriodicTriangulation& t);

// Splits p along one of its 8 diagonals into 128 simplices.
std::vector<Simplex> split_cross_polytope(const CrossPolytopeE8& p, const RatVec& diagonal);

// ---------------------------------------------------------------------------
// regulators (secondary cone inequalities)

enum class RegulatorKind { type1, type2, type3 };

struct Regulator {
    RegulatorKind kind;
    // Translation-normalized terms (lexicographically smallest point at 0),
    // sorted; coefficients sum to zero and weighted points sum to zero.
    std::vector<std::pair<Rational, RatVec>> terms;

    Rational evaluate(const SymMatrix& q) const;
    // sum_i alpha_i v_i v_i^t, the translation-invariant matrix of the form.
    SymMatrix form_matrix(int dim = 8) const;
};

struct RegulatorSet {
    std::vector<Regulator> regulators;  // deduplicated linear forms
    long type1_instances = 0;           // per-cell instance counts before dedup
    long type2_instances = 0;
    long type3_instances = 0;
};

RegulatorSet regulators(const E8Model& model, const PeriodicTriangulation& t);

// Builds the regulator of an adjacent simplex pair sharing a facet; the
// coefficient of the vertex exclusive to `l` is normalized to 1.
Regulator regulator_from_pair(const std::vector<RatVec>& l, const std::vector<RatVec>& lp,
                              RegulatorKind kind);

// The 19200 representative simplices of the refined triangulation
// (1920 unrefined Delone simplices + 135*128 cross polytope pieces),
// translation classes anchored at the lexicographically smallest vertex.
std::vector<Simplex> representative_simplices(const E8Model& model,
                                              const PeriodicTriangulation& t);

// Exact inhomogeneous minimum of the lattice's own form: the maximum
// squared circumradius over all Delone cell classes (1920 simplices at
// 8/9, 135 cross polytopes at 1).
Rational e8_inhomogeneous_minimum(const E8Model& model);

// The automorphism H.A.H used to identify the two Delone-feasible
// candidates (A swaps coordinates 1 and 5 with sign flips, H = diag(H4,H4)).
RatMat hah_transform();
// Image of a standard-coordinate point under an 8x8 matrix.
RatVec transform_point(const RatMat& m, const RatVec& x);

// Number of irredundant inequalities of the secondary cone closure and how
// many of those vanish at the lattice's own form. `interior_form` must make
// every regulator strictly positive (an interior point of the cone). Exact
// but expensive; only invoked by the optional facet-count paths.
struct FacetCount {
    long facets = 0;
    long through_e8 = 0;
    long candidates = 0;  // distinct normals up to positive scaling
    long orbit_classes = 0;
};
FacetCount facet_count(const E8Model& model, const RegulatorSet& regs,
                       const SymMatrix& interior_form);

}  // namespace covlat
