#pragma once

#include "covlat/linalg.hpp"

namespace covlat {

enum class LPStatus { optimal, infeasible, unbounded };

struct LPResult {
    LPStatus status;
    Rational value;  // objective at optimum (when optimal)
    RatVec x;        // optimizer (when optimal)
};

// Exact rational simplex, Bland's rule (terminates on degenerate problems).
// Maximizes c^T x subject to a[i] . x <= b[i]; variables are free.
LPResult lp_maximize(const RatMat& a, const RatVec& b, const RatVec& c);

// Floating-point twin used only to presolve large systems; every verdict
// derived from it is re-established exactly by the callers.
struct LPResultD {
    LPStatus status;
    double value;
    std::vector<double> x;
};
LPResultD lp_maximize_d(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                        const std::vector<double>& c);

// Counts the irredundant inequalities of the full-dimensional cone
// { x : normals[j] . x >= 0 } (normals deduplicated up to positive scaling
// beforehand). `orbits` partitions the normal indices into symmetry classes
// sharing one verdict; `interior` must satisfy every inequality strictly.
// Redundancy verdicts come from exact LPs over lazily grown working sets;
// irredundancy verdicts from exact separating witnesses.
std::vector<bool> irredundant_inequalities(const RatMat& normals,
                                           const std::vector<std::vector<size_t>>& orbits,
                                           const RatVec& interior);

}  // namespace covlat
