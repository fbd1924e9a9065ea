#pragma once

#include <functional>
#include <string>
#include <vector>

#include "covlat/linalg.hpp"

namespace covlat {

// ---------------------------------------------------------------------------
// shells of a quadratic form

// Vectors are integer coordinate tuples in the basis underlying the form.
// Closed under negation, duplicate free, lexicographically sorted.
struct Shell {
    Rational norm;
    std::vector<IntVec> vectors;
};

struct DegenerateSimplexError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Complete enumeration of { v integer : Q[v] = norm } by exact rational
// branch-and-bound on the triangular (LDL^t) decomposition of Q. No
// floating point enters any accept/reject decision.
Shell enumerate_shell(const PQF& q, const Rational& norm, int threads = 1);

// Streaming variant: fn(v) is invoked once per shell vector (negations
// included); no order guarantee. Used for shells too large to store.
void enumerate_shell_streaming(const PQF& q, const Rational& norm,
                               const std::function<void(const IntVec&)>& fn, int threads = 1);

// min over nonzero integer vectors of Q[v], exact.
Rational homogeneous_minimum(const PQF& q);

// ---------------------------------------------------------------------------
// simplices and circumspheres

struct Simplex {
    std::vector<RatVec> vertices;  // d+1 points of dimension d
};

struct Circumsphere {
    RatVec center;
    Rational radius_sq;
};

// Exact circumcenter/radius from the linear equidistance system.
Circumsphere circumsphere_solve(const Simplex& s, const PQF& q);

// Squared circumradius by the bordered determinant formula
//   r^2 = -(1/4) det(bordered) / det(gram of edge vectors),
// evaluated after translating the first vertex to the origin.
Rational circumradius_sq_determinant(const Simplex& s, const PQF& q);

// Squared circumradius recomputed from the centroid m and circumcenter c:
//   r^2 = Q[c - m] + 1/(d+1)^2 * sum over unordered vertex pairs Q[v_k - v_l].
Rational apollonius_radius_sq(const Simplex& s, const PQF& q);

// Relative simplex volume scaled by d!: |det of edge matrix|.
Rational simplex_volume_scaled(const Simplex& s);

// ---------------------------------------------------------------------------
// moment form machinery

struct MomentForm {
    SymMatrix matrix;
    long simplex_count = 0;
};

// F = 1/(n(d+1)) * sum_i sum_{k<l} (v_ik - v_il)(v_ik - v_il)^t
MomentForm moment_form(const std::vector<Simplex>& simplices);

struct DetSurfaceMin {
    Rational value_dth_power;   // (min/d)^d = det_target * det F
    SymMatrix minimizer_direction;  // F^{-1}; true minimizer is its d-th root scaling
};

// Minimum of Q' -> trace(F Q') over the surface det Q' = det_target.
DetSurfaceMin min_on_det_surface(const SymMatrix& f, const Rational& det_target, int d);

// (Theta_lb / kappa_d)^2 = (d/(d+1))^d * det F
Rational covering_bound_sq(const SymMatrix& f, int d);

// (Theta / kappa_d)^2 = mu^d / det Q, with mu the exact inhomogeneous
// minimum supplied by a caller that knows the Delone subdivision.
Rational covering_density_sq_ratio(const PQF& q, const Rational& mu);

// gamma^2 = 4 mu / lambda(Q)  (packing-covering constant squared)
Rational gamma_sq(const PQF& q, const Rational& mu);

// ---------------------------------------------------------------------------
// exact density comparison against decimal thresholds

enum class Verdict { less, greater, inconclusive };
std::string verdict_to_string(Verdict v);

// Fixed rational enclosure of pi, 70 decimal digits wide.
Rational pi_lower();
Rational pi_upper();
int pi_enclosure_digits();

// Interval for kappa_d^2 = pi^d / Gamma(d/2+1)^2 derived from the pi
// enclosure (Gamma(d/2+1)^2 is rational for every d).
std::pair<Rational, Rational> kappa_sq_interval(int d);

// Decides Theta < threshold vs Theta > threshold for Theta^2 =
// theta_sq_ratio * kappa_d^2; returns inconclusive when the pi enclosure
// straddles the threshold rather than guessing.
Verdict compare_density_to_decimal(const Rational& theta_sq_ratio, const std::string& threshold,
                                   int d);

}  // namespace covlat
