#include "covlat/lp.hpp"
#include "doctest.h"

using namespace covlat;

TEST_CASE("simple bounded maximum") {
    // max x + y s.t. x <= 1, y <= 2
    RatMat a = {rat_vec({1, 0}), rat_vec({0, 1})};
    RatVec b = {Rational(1), Rational(2)};
    LPResult r = lp_maximize(a, b, rat_vec({1, 1}));
    REQUIRE(r.status == LPStatus::optimal);
    CHECK(r.value == 3);
    CHECK(r.x[0] == 1);
    CHECK(r.x[1] == 2);
}

TEST_CASE("negative right-hand sides require phase one") {
    // max -x s.t. -x <= -3  (x >= 3)
    RatMat a = {rat_vec({-1})};
    RatVec b = {Rational(-3)};
    LPResult r = lp_maximize(a, b, rat_vec({-1}));
    REQUIRE(r.status == LPStatus::optimal);
    CHECK(r.value == -3);
    CHECK(r.x[0] == 3);
}

TEST_CASE("infeasible system detected") {
    // x <= -1 and x >= 2
    RatMat a = {rat_vec({1}), rat_vec({-1})};
    RatVec b = {Rational(-1), Rational(-2)};
    LPResult r = lp_maximize(a, b, rat_vec({0}));
    CHECK(r.status == LPStatus::infeasible);
}

TEST_CASE("unbounded objective detected") {
    RatMat a = {rat_vec({-1})};
    RatVec b = {Rational(0)};
    LPResult r = lp_maximize(a, b, rat_vec({1}));
    CHECK(r.status == LPStatus::unbounded);
}

TEST_CASE("margin maximization pattern") {
    // max t s.t. t <= x, t <= 1 - x, 0 <= x <= 1  ->  t = 1/2 at x = 1/2
    // vars (x, t): constraints t - x <= 0, t + x <= 1, x <= 1, -x <= 0
    RatMat a = {rat_vec({-1, 1}), rat_vec({1, 1}), rat_vec({1, 0}), rat_vec({-1, 0})};
    RatVec b = {Rational(0), Rational(1), Rational(1), Rational(0)};
    LPResult r = lp_maximize(a, b, rat_vec({0, 1}));
    REQUIRE(r.status == LPStatus::optimal);
    CHECK(r.value == Rational(1, 2));
    CHECK(r.x[0] == Rational(1, 2));
}

TEST_CASE("exact rational coefficients") {
    // max x s.t. (2/3) x <= 5/7  ->  x = 15/14
    RatMat a = {{Rational(2, 3)}};
    RatVec b = {Rational(5, 7)};
    LPResult r = lp_maximize(a, b, rat_vec({1}));
    REQUIRE(r.status == LPStatus::optimal);
    CHECK(r.value == Rational(15, 14));
}

TEST_CASE("irredundant inequalities of a toy secondary cone") {
    // the classical 2-dimensional cone: q12 >= 0, q11 - q12 >= 0, q22 - q12 >= 0
    // over variables (q11, q22, q12); a fourth inequality is a positive
    // combination of the others and must be flagged redundant
    RatMat normals = {rat_vec({0, 0, 1}), rat_vec({1, 0, -1}), rat_vec({0, 1, -1}),
                      rat_vec({1, 1, 0})};
    std::vector<std::vector<size_t>> orbits = {{0}, {1}, {2}, {3}};
    RatVec interior = rat_vec({2, 2, 1});
    std::vector<bool> facet = irredundant_inequalities(normals, orbits, interior);
    CHECK(facet[0]);
    CHECK(facet[1]);
    CHECK(facet[2]);
    CHECK_FALSE(facet[3]);
}
