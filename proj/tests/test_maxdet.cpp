#include <random>

#include "covlat/maxdet.hpp"
#include "doctest.h"

using namespace covlat;

namespace {

const E8Model& model() { return E8Model::instance(); }

const PeriodicTriangulation& tri(const std::vector<int>& sel) {
    static const auto cands = candidate_triangulations(model());
    for (const auto& t : cands)
        if (t.orbit_selection == sel) return t;
    throw std::logic_error("triangulation not found");
}

const RegulatorSet& regs_i1() {
    static const RegulatorSet rs = regulators(model(), tri({1, 3, 6, 10, 11, 12, 13}));
    return rs;
}

}  // namespace

TEST_CASE("invariant subspace embed/project") {
    InvariantSubspace space;
    CHECK(space.dim() == 4);
    CHECK(space.basis().size() == 4);

    // the lattice's own form (the identity here) is G-invariant
    SymMatrix id = SymMatrix::identity(8);
    RatVec p = space.project(id);
    CHECK(p == rat_vec({1, 0, 1, 0}));
    CHECK(space.embed(p) == id);

    // round trip from parameters
    RatVec q = {Rational(7, 5), Rational(-1, 3), Rational(2), Rational(1, 9)};
    CHECK(space.project(space.embed(q)) == q);

    // a non-invariant form moves under projection
    SymMatrix skew(8);
    skew.set(0, 0, 1);
    skew.set(3, 3, 5);
    CHECK(space.embed(space.project(skew)) != skew);
}

TEST_CASE("interior point exists for I1 and fails for a non-Delone candidate") {
    PQF w = interior_point(regs_i1());
    for (const auto& r : regs_i1().regulators) CHECK(r.evaluate(w.matrix()) > 0);

    const PeriodicTriangulation& bad = tri({1, 3, 6, 11, 12, 13, 20});
    RegulatorSet bad_regs = regulators(model(), bad);
    CHECK_THROWS_AS(interior_point(bad_regs), InfeasibleTriangulation);
}

TEST_CASE("barrier is finite at the scaled interior point and -inf outside") {
    CoveringOptimizer opt(model(), tri({1, 3, 6, 10, 11, 12, 13}), regs_i1());
    std::array<double, 4> p{};
    for (int k = 0; k < 4; ++k) p[static_cast<size_t>(k)] = opt.start_params()[static_cast<size_t>(k)].get_d();
    double mu = opt.max_radius_sq(p);
    for (auto& v : p) v *= 0.5 / mu;
    CHECK(opt.strictly_feasible(p));
    CHECK(std::isfinite(opt.barrier(p, 1.0)));

    std::array<double, 4> outside{1.0, 0.9, 1.0, 0.0};  // wildly indefinite
    CHECK_FALSE(std::isfinite(opt.barrier(outside, 1.0)));

    // gradient via the built-in step agrees with an independent step
    auto g1 = opt.barrier_gradient(p, 1.0, 1e-7);
    auto g2 = opt.barrier_gradient(p, 1.0, 1e-6);
    for (int k = 0; k < 4; ++k) {
        double denom = std::max(1.0, std::fabs(g2[static_cast<size_t>(k)]));
        CHECK(std::fabs(g1[static_cast<size_t>(k)] - g2[static_cast<size_t>(k)]) / denom < 1e-4);
    }
}

TEST_CASE("rationalize is exact on exactly-representable optima") {
    CoveringOptimizer opt(model(), tri({1, 3, 6, 10, 11, 12, 13}), regs_i1());
    OptimizeResult fake;
    fake.params = {1.0, 0.0, 1.0, 0.0};  // float(Gram(E8)) in these coordinates
    // no active set
    PQF q = rationalize(opt, fake, Integer(1000000));
    CHECK(q.matrix() == SymMatrix::identity(8));
}

TEST_CASE("certify rejects a type-3 violating perturbation with a named regulator") {
    const RegulatorSet& rs = regs_i1();
    size_t t3 = SIZE_MAX;
    for (size_t j = 0; j < rs.regulators.size(); ++j)
        if (rs.regulators[j].kind == RegulatorKind::type3) {
            t3 = j;
            break;
        }
    REQUIRE(t3 != SIZE_MAX);
    SymMatrix m = rs.regulators[t3].form_matrix();
    Rational msq = frobenius(m, m);
    REQUIRE(msq > 0);
    SymMatrix q = SymMatrix::identity(8) - m * (Rational(1, 100) / msq);
    REQUIRE(is_positive_definite(q));
    REQUIRE(rs.regulators[t3].evaluate(q) < 0);
    bool rejected = false;
    try {
        certify(model(), tri({1, 3, 6, 10, 11, 12, 13}), rs, q, "3.2013", 1);
    } catch (const CertifyRejection& e) {
        rejected = true;
        CHECK(e.stage == "regulators");
        CHECK(e.detail_index >= 0);
        CHECK(rs.regulators[static_cast<size_t>(e.detail_index)].evaluate(q) < 0);
    }
    CHECK(rejected);
}

TEST_CASE("certify rejects non-positive-definite input") {
    SymMatrix bad(8);
    bad.set(0, 1, 1);
    bool rejected = false;
    try {
        certify(model(), tri({1, 3, 6, 10, 11, 12, 13}), regs_i1(), bad, "3.2013", 1);
    } catch (const CertifyRejection& e) {
        rejected = true;
        CHECK(e.stage == "positivity");
    }
    CHECK(rejected);
}

TEST_CASE("reference appendix form diagnostic") {
    ReferenceDiagnostic d = reference_form_diagnostic();
    CHECK(d.positive_definite);
    CHECK(d.det > 0);
    // the reference combination has coefficients of order 1e10, so its
    // determinant should sit near (scale)^8 * det(optimum) ~ 1.6e80
    double logdet = std::log10(d.det.get_d());
    CHECK(logdet > 79.0);
    CHECK(logdet < 81.0);
}
