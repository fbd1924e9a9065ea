#pragma once

#include "covlat/golay.hpp"
#include "covlat/qform.hpp"

namespace covlat {

// The Leech lattice in the 1/sqrt(8)-scaled integer coordinates: the
// generator matrix B has integer entries and Gram = (1/8) B B^t is an even
// unimodular 24x24 matrix with minimum 4. The shipped generator is embedded
// constant data (reduced so shell enumeration stays cheap) and is validated
// against all model invariants at build time; COVERING_DATA_DIR may point
// to a directory with a replacement leech_generator.txt asset.
class LeechModel {
  public:
    const PQF& gram() const { return gram_; }
    const IntMat& generator() const { return generator_; }

    // inhomogeneous minimum mu(Q) = 2, the squared covering radius
    // established by Conway, Parker and Sloane; carried as model data, not
    // recomputed (computing it would need the full Delone classification).
    Rational mu() const { return 2; }

    // Cached norm-4 shell (196560 vectors, basis coordinates).
    const Shell& minimal_shell() const;

  private:
    friend LeechModel build_leech(int threads);
    PQF gram_ = PQF::trusted(SymMatrix::identity(24));
    IntMat generator_;
    mutable Shell shell4_;
};

// Constructs and fully validates the model: det(gram) = 1, gram even,
// homogeneous minimum 4, norm-4 shell of size 196560.
LeechModel build_leech(int threads = 1);

// Derives a generator from first principles (Golay congruences -> Hermite
// form -> exact LLL). Used to produce the embedded constant and to
// cross-check it in tests.
IntMat construct_leech_generator();

// Unscaled-coordinate membership: all entries congruent to m mod 2 for
// m in {0,1}, ((x - m)/2 mod 2) a Golay codeword, sum(x) = 4m mod 8.
bool leech_contains_unscaled(const GolayCode& code, const std::vector<Integer>& x);

// The embedded generator asset (leech_data.cpp) and its FNV-1a checksum.
const IntMat& embedded_leech_generator();
uint64_t leech_generator_checksum(const IntMat& rows);

// ---------------------------------------------------------------------------
// the section-5 pipeline

// Exact check of sum_{v in S} v v^t = (norm |S| / d) Q^{-1} for a shell S.
bool design_identity_check(const PQF& q, const std::vector<IntVec>& shell, const Rational& norm);

// Streaming variant for shells too large to hold; sums v v^t in 64-bit
// (entries stay far below overflow) and compares exactly at the end.
bool design_identity_check_streaming(const PQF& q, const Rational& norm, int threads,
                                     long* count_out = nullptr);

// F = 1/(d+1) (275/6 + 25/4) gram^-1 = (25/12) gram^-1, substituting the
// A24 edge profile (275 edges of norm 4, 25 of norm 6) into the 2-design
// identity for each shell; no automorphism group is constructed.
MomentForm leech_moment_form(const LeechModel& model);

struct SimplexEdgeProfile {
    int edges_norm4 = 275;
    int edges_norm6 = 25;
};

struct Theorem1Report {
    Rational theta_sq_ratio;    // (Theta/kappa_24)^2 = mu^24 / det = 2^24
    Rational bound_sq_ratio;    // (Theta_lb/kappa_24)^2 from the moment form
    Rational moment_form_det;   // det F = 5^48 / (2^48 3^24)
    bool tight = false;         // bound meets the density: local optimality
    bool design_identity_norm4 = false;
    long shell4_size = 0;
};

Theorem1Report theorem1_certificate(const LeechModel& model, int threads = 1);

}  // namespace covlat
