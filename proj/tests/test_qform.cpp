#include <random>

#include "covlat/qform.hpp"
#include "doctest.h"

using namespace covlat;

namespace {

SymMatrix e8_gram() {
    SymMatrix g(8);
    g.set(0, 0, 4);
    g.set(0, 1, -2);
    g.set(0, 7, 1);
    for (int i = 1; i < 7; ++i) {
        g.set(i, i, 2);
        if (i + 1 < 7) g.set(i, i + 1, -1);
    }
    g.set(7, 7, 2);
    return g;
}

Simplex unit_triangle() {
    return {{rat_vec({0, 0}), rat_vec({1, 0}), rat_vec({0, 1})}};
}

// Standard-coordinate E8 Delone simplex 0, (1/2,...,1/2), e1+ei.
Simplex e8_delone_simplex() {
    Simplex s;
    s.vertices.push_back(RatVec(8, Rational(0)));
    s.vertices.push_back(RatVec(8, Rational(1, 2)));
    for (int i = 1; i < 8; ++i) {
        RatVec v(8, Rational(0));
        v[0] = 1;
        v[i] = 1;
        s.vertices.push_back(v);
    }
    return s;
}

}  // namespace

TEST_CASE("shell enumeration small cases") {
    PQF id2(SymMatrix::identity(2));
    Shell s = enumerate_shell(id2, 1);
    CHECK(s.vectors.size() == 4);
    Shell s2 = enumerate_shell(id2, 2);
    CHECK(s2.vectors.size() == 4);  // (+-1, +-1)
    Shell s3 = enumerate_shell(id2, 3);
    CHECK(s3.vectors.empty());
}

TEST_CASE("E8 shell counts") {
    PQF g(e8_gram());
    CHECK(enumerate_shell(g, 2).vectors.size() == 240);
    CHECK(enumerate_shell(g, 4).vectors.size() == 2160);
}

TEST_CASE("shells are negation closed, duplicate free, sorted") {
    PQF g(e8_gram());
    Shell s = enumerate_shell(g, 2);
    CHECK(s.vectors.size() % 2 == 0);
    for (size_t i = 1; i < s.vectors.size(); ++i) CHECK(s.vectors[i - 1] < s.vectors[i]);
    for (const auto& v : s.vectors) {
        IntVec neg(v.size());
        for (size_t k = 0; k < v.size(); ++k) neg[k] = -v[k];
        CHECK(std::binary_search(s.vectors.begin(), s.vectors.end(), neg));
        CHECK(evaluate(g.matrix(), RatVec(v.begin(), v.end())) == 2);
    }
}

TEST_CASE("homogeneous minimum") {
    CHECK(homogeneous_minimum(PQF(SymMatrix::identity(5))) == 1);
    CHECK(homogeneous_minimum(PQF(e8_gram())) == 2);
}

TEST_CASE("circumsphere of the unit right triangle") {
    PQF id2(SymMatrix::identity(2));
    Circumsphere c = circumsphere_solve(unit_triangle(), id2);
    CHECK(c.center == RatVec{Rational(1, 2), Rational(1, 2)});
    CHECK(c.radius_sq == Rational(1, 2));
    CHECK(circumradius_sq_determinant(unit_triangle(), id2) == Rational(1, 2));
    CHECK(apollonius_radius_sq(unit_triangle(), id2) == Rational(1, 2));
}

TEST_CASE("apollonius d=1 unit segment") {
    PQF id1(SymMatrix::identity(1));
    Simplex seg{{rat_vec({0}), rat_vec({1})}};
    CHECK(apollonius_radius_sq(seg, id1) == Rational(1, 4));
}

TEST_CASE("E8 Delone simplex circumradius is 8/9") {
    PQF id8(SymMatrix::identity(8));
    Simplex s = e8_delone_simplex();
    Circumsphere c = circumsphere_solve(s, id8);
    CHECK(c.radius_sq == Rational(8, 9));
    CHECK(circumradius_sq_determinant(s, id8) == Rational(8, 9));
    CHECK(apollonius_radius_sq(s, id8) == Rational(8, 9));
    // All 36 edges have squared length 2.
    int norm2_edges = 0;
    for (size_t k = 0; k < s.vertices.size(); ++k)
        for (size_t l = k + 1; l < s.vertices.size(); ++l)
            if (evaluate(id8.matrix(), sub(s.vertices[k], s.vertices[l])) == 2) ++norm2_edges;
    CHECK(norm2_edges == 36);
}

TEST_CASE("degenerate simplices are rejected") {
    PQF id2(SymMatrix::identity(2));
    Simplex flat{{rat_vec({0, 0}), rat_vec({1, 0}), rat_vec({2, 0})}};
    CHECK_THROWS_AS(circumsphere_solve(flat, id2), DegenerateSimplexError);
    CHECK_THROWS_AS(circumradius_sq_determinant(flat, id2), DegenerateSimplexError);
}

TEST_CASE("three circumradius methods agree on random simplices") {
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<long> coef(-3, 3);
    int done = 0;
    while (done < 30) {
        int d = 2 + static_cast<int>(rng() % 7);
        // Random PQF as A^t A + I to stay safely positive definite.
        RatMat a(d, RatVec(d));
        for (auto& row : a)
            for (auto& v : row) v = coef(rng);
        SymMatrix q(d);
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) {
                Rational s = (i == j) ? 1 : 0;
                for (int k = 0; k < d; ++k) s += a[k][i] * a[k][j];
                q.set(i, j, s);
            }
        Simplex s;
        for (int i = 0; i <= d; ++i) {
            RatVec v(d);
            for (auto& e : v) e = coef(rng);
            s.vertices.push_back(v);
        }
        PQF pq = PQF::trusted(q);
        Rational r1;
        try {
            r1 = circumsphere_solve(s, pq).radius_sq;
        } catch (const DegenerateSimplexError&) {
            continue;
        }
        CHECK(circumradius_sq_determinant(s, pq) == r1);
        CHECK(apollonius_radius_sq(s, pq) == r1);
        ++done;
    }
}

TEST_CASE("moment form of a single segment") {
    Simplex seg{{rat_vec({0}), rat_vec({1})}};
    MomentForm f = moment_form({seg});
    CHECK(f.matrix.at(0, 0) == Rational(1, 2));
    CHECK(f.simplex_count == 1);
}

TEST_CASE("moment form is translation invariant") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> coef(-2, 2);
    Simplex s;
    for (int i = 0; i <= 3; ++i) {
        RatVec v(3);
        for (auto& e : v) e = coef(rng);
        s.vertices.push_back(v);
    }
    Simplex t = s;
    for (auto& v : t.vertices) v = add(v, rat_vec({5, -7, 2}));
    CHECK(moment_form({s}).matrix == moment_form({t}).matrix);
}

TEST_CASE("minimum of a linear form on the determinant surface") {
    DetSurfaceMin m = min_on_det_surface(SymMatrix::identity(2), 1, 2);
    CHECK(m.value_dth_power == 1);
    CHECK(m.minimizer_direction == SymMatrix::identity(2));

    SymMatrix f(2);
    f.set(0, 0, 4);
    f.set(1, 1, 1);
    m = min_on_det_surface(f, 1, 2);
    CHECK(m.value_dth_power == 4);
    CHECK(m.minimizer_direction.at(0, 0) == Rational(1, 4));
    CHECK(m.minimizer_direction.at(1, 1) == 1);

    // First-order condition: trace(F F^-1) = d.
    CHECK(frobenius(f, m.minimizer_direction) == 2);

    SymMatrix indefinite(2);
    indefinite.set(0, 1, 1);
    CHECK_THROWS_AS(min_on_det_surface(indefinite, 1, 2), std::invalid_argument);
}

TEST_CASE("covering bound and density ratios") {
    SymMatrix f1(1);
    f1.set(0, 0, Rational(1, 2));
    CHECK(covering_bound_sq(f1, 1) == Rational(1, 4));

    PQF z(SymMatrix::identity(1));
    CHECK(covering_density_sq_ratio(z, Rational(1, 4)) == Rational(1, 4));
    CHECK(gamma_sq(z, Rational(1, 4)) == 1);
}

TEST_CASE("pi enclosure is consistent with a Machin-formula computation") {
    // Independent oracle: pi = 16 atan(1/5) - 4 atan(1/239) with exact
    // alternating partial sums bracketing each arctangent.
    auto atan_interval = [](long x, int terms) {
        Rational lo = 0, hi = 0, sum = 0;
        Rational xr(1, x);
        Rational pow = xr;
        for (int k = 0; k < terms; ++k) {
            Rational term = pow / Rational(2 * k + 1);
            sum += (k % 2 == 0) ? term : -term;
            if (k == terms - 2) lo = sum;
            if (k == terms - 1) hi = sum;
            pow *= xr * xr;
        }
        if (lo > hi) std::swap(lo, hi);
        return std::make_pair(lo, hi);
    };
    auto [lo5, hi5] = atan_interval(5, 60);
    auto [lo239, hi239] = atan_interval(239, 20);
    Rational pi_lo = 16 * lo5 - 4 * hi239;
    Rational pi_hi = 16 * hi5 - 4 * lo239;
    CHECK(pi_lo <= pi_hi);
    CHECK(pi_lower() <= pi_lo);
    CHECK(pi_hi <= pi_upper());
    CHECK(pi_upper() - pi_lower() == Rational(Integer(1), integer_pow(10, 70)));
}

TEST_CASE("density verdicts for E8's covering density kappa_8") {
    // Theta(E8) = kappa_8 = pi^4/24 = 4.05871...
    CHECK(compare_density_to_decimal(1, "4.0588", 8) == Verdict::less);
    CHECK(compare_density_to_decimal(1, "4.0587", 8) == Verdict::greater);
    // A threshold squeezed inside the enclosure width cannot be decided.
    // (kappa_8 itself as threshold is irrational, so any decimal is decidable;
    // simulate indecision with a ratio multiplying out to the threshold.)
    Rational thr = rational_from_decimal("2.0");
    auto [klo, khi] = kappa_sq_interval(8);
    (void)khi;
    Rational ratio = thr * thr / klo;  // Theta^2 lands on the threshold boundary
    CHECK(compare_density_to_decimal(ratio, "2.0", 8) != Verdict::less);
}

TEST_CASE("kappa interval for odd dimensions") {
    auto [lo, hi] = kappa_sq_interval(1);  // kappa_1 = 2 exactly
    CHECK(lo == 4);
    CHECK(hi == 4);
    auto [lo3, hi3] = kappa_sq_interval(3);  // kappa_3 = 4 pi / 3
    CHECK(lo3 <= Rational(16) * pi_lower() * pi_lower() / 9);
    CHECK(hi3 >= Rational(16) * pi_lower() * pi_lower() / 9);
}
