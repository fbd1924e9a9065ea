#include <random>

#include "covlat/linalg.hpp"
#include "doctest.h"

using namespace covlat;

namespace {

SymMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    SymMatrix m(static_cast<int>(rows.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows.size(); ++j) m.set(static_cast<int>(i), static_cast<int>(j), rows[i][j]);
    return m;
}

// Gram matrix of the usual E8 basis 2e1, e2-e1, ..., e7-e6, (1/2,...,1/2).
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

}  // namespace

TEST_CASE("determinant basics") {
    CHECK(determinant(SymMatrix::identity(8)) == 1);
    CHECK(determinant(from_rows({{2, 1}, {1, 2}})) == 3);
    CHECK(determinant(e8_gram()) == 1);
}

TEST_CASE("positive definiteness is exact") {
    CHECK(is_positive_definite(SymMatrix::identity(3)));
    CHECK_FALSE(is_positive_definite(from_rows({{1, 2}, {2, 1}})));
    CHECK(is_positive_definite(e8_gram()));
    SymMatrix zero(2);
    CHECK_FALSE(is_positive_definite(zero));
}

TEST_CASE("inverse") {
    CHECK(inverse(SymMatrix::identity(5)) == SymMatrix::identity(5));

    SymMatrix diag(2);
    diag.set(0, 0, 2);
    diag.set(1, 1, 4);
    SymMatrix inv = inverse(diag);
    CHECK(inv.at(0, 0) == Rational(1, 2));
    CHECK(inv.at(1, 1) == Rational(1, 4));
    CHECK(inv.at(0, 1) == 0);

    // Gram(E8)^-1 * Gram(E8) = identity, checked through evaluate identities.
    SymMatrix g = e8_gram();
    SymMatrix gi = inverse(g);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            Rational s = 0;
            for (int k = 0; k < 8; ++k) s += gi.at(i, k) * g.at(k, j);
            CHECK(s == (i == j ? 1 : 0));
        }

    SymMatrix singular = from_rows({{1, 1}, {1, 1}});
    CHECK_THROWS_AS(inverse(singular), SingularMatrixError);
}

TEST_CASE("nullspace") {
    RatMat none;
    RatMat basis = nullspace(none, 3);
    CHECK(basis.size() == 3);

    RatMat rows = {rat_vec({1, -1, 0}), rat_vec({0, 1, -1})};
    basis = nullspace(rows, 3);
    REQUIRE(basis.size() == 1);
    // proportional to (1,1,1)
    CHECK(basis[0][0] == basis[0][1]);
    CHECK(basis[0][1] == basis[0][2]);
    CHECK(basis[0][0] != 0);
    for (const auto& r : rows) CHECK(dot(r, basis[0]) == 0);
}

TEST_CASE("evaluate") {
    CHECK(evaluate(SymMatrix::identity(2), rat_vec({1, 1})) == 2);
    CHECK(evaluate(e8_gram(), rat_vec({1, 1, 0, 0, 0, 0, 0, 0})) == 2);
    CHECK_THROWS_AS(evaluate(SymMatrix::identity(2), rat_vec({1, 1, 1})), DimensionMismatch);
}

TEST_CASE("determinant of inverse is reciprocal (random)") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> coef(-4, 4);
    for (int trial = 0; trial < 25; ++trial) {
        int d = 2 + static_cast<int>(rng() % 5);
        SymMatrix m(d);
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) m.set(i, j, coef(rng));
        Rational det = determinant(m);
        if (det == 0) continue;
        CHECK(det * determinant(inverse(m)) == 1);
    }
}

TEST_CASE("A^t A positive definite iff det A nonzero (random)") {
    std::mt19937 rng(999);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
        int d = 2 + static_cast<int>(rng() % 4);
        RatMat a(d, RatVec(d));
        for (auto& row : a)
            for (auto& v : row) v = coef(rng);
        SymMatrix m(d);
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) {
                Rational s = 0;
                for (int k = 0; k < d; ++k) s += a[k][i] * a[k][j];
                m.set(i, j, s);
            }
        CHECK(is_positive_definite(m) == (determinant_rows(a) != 0));
    }
}

TEST_CASE("nullspace rank-nullity and exact annihilation (random)") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        int cols = 4 + static_cast<int>(rng() % 4);
        int nrows = 1 + static_cast<int>(rng() % 6);
        RatMat rows(nrows, RatVec(cols));
        for (auto& r : rows)
            for (auto& v : r) v = coef(rng);
        RatMat basis = nullspace(rows, cols);
        RowEliminator elim(cols);
        for (const auto& r : rows) elim.insert(r);
        CHECK(elim.rank() + static_cast<int>(basis.size()) == cols);
        for (const auto& b : basis)
            for (const auto& r : rows) CHECK(dot(r, b) == 0);
    }
}

TEST_CASE("hermite normal form recovers a triangular basis") {
    IntMat rows = {{Integer(2), Integer(0)}, {Integer(1), Integer(1)}, {Integer(3), Integer(1)}};
    IntMat h = hermite_normal_form(rows);
    REQUIRE(h.size() == 2);
    CHECK(h[0][0] == 1);  // gcd of first column entries
    CHECK(h[1][0] == 0);
    CHECK(h[1][1] == 2);  // index-2 sublattice in that direction: 2x2 det = 2
}

TEST_CASE("lll reduction preserves determinant and unimodularity") {
    // A deliberately skewed rank-3 gram built from basis rows
    // (1,0,0), (7,1,0), (13,4,1).
    std::vector<std::vector<long>> b = {{1, 0, 0}, {7, 1, 0}, {13, 4, 1}};
    SymMatrix g(3);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            long s = 0;
            for (int k = 0; k < 3; ++k) s += b[i][k] * b[j][k];
            g.set(i, j, s);
        }
    Rational det_before = determinant(g);
    SymMatrix reduced = g;
    IntMat u = lll_reduce_gram(reduced);
    CHECK(determinant(reduced) == det_before);
    // |det U| must be 1.
    RatMat ur(u.size(), RatVec(u.size()));
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = 0; j < u.size(); ++j) ur[i][j] = Rational(u[i][j]);
    Rational det_u = determinant_rows(ur);
    CHECK((det_u == 1 || det_u == -1));
    // Reduced vectors are no longer than the originals' worst case.
    CHECK(reduced.at(0, 0) <= g.at(2, 2));
}
