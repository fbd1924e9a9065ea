#include "covlat/rigidity.hpp"
#include "doctest.h"

using namespace covlat;

TEST_CASE("identity satisfies every constraint row") {
    for (int d : {2, 3, 5, 8}) {
        RigiditySystem s = build_system(d);
        RatVec id(static_cast<size_t>(d * (d + 1) / 2), Rational(0));
        for (int i = 0; i < d; ++i) id[sym_index(d, i, i)] = 1;
        for (const auto& row : s.rows) CHECK(dot(row, id) == 0);
    }
}

TEST_CASE("ambient dimensions") {
    CHECK(build_system(8).rows.front().size() == 36);
    CHECK(build_system(24).rows.front().size() == 300);
}

TEST_CASE("d = 2 control case leaves the off-diagonal free") {
    RigiditySystem s = build_system(2);
    CHECK(s.rows.size() == 1);  // only c11 - c22
    RigidityResult r = solution_space(s);
    CHECK(r.nullspace_dim == 2);
    CHECK_FALSE(r.basis_is_identity);
}

TEST_CASE("sanity ladder d = 4..8 and the two lattice dimensions") {
    for (int d = 4; d <= 8; ++d) {
        RigidityResult r = solution_space(build_system(d));
        CHECK(r.nullspace_dim == 1);
        CHECK(r.basis_is_identity);
    }
    RigidityResult leech = rigidity_verdict(24);
    CHECK(leech.dimension == 24);
    CHECK(leech.nullspace_dim == 1);
    CHECK(leech.basis_is_identity);
}

TEST_CASE("d = 3 has no four distinct indices") {
    RigidityResult r = solution_space(build_system(3));
    CHECK(r.nullspace_dim == 4);  // c11=c22=c33 plus three free off-diagonals
}

TEST_CASE("streamed rows annihilate the identity for d = 24") {
    const int d = 24;
    std::vector<bool> is_diag(static_cast<size_t>(d * (d + 1) / 2), false);
    for (int i = 0; i < d; ++i) is_diag[static_cast<size_t>(sym_index(d, i, i))] = true;
    long rows = 0, violations = 0;
    for_each_constraint_row(d, [&](const RowEliminator::SparseRow& row) {
        ++rows;
        Rational diag_sum = 0;
        for (const auto& [col, v] : row)
            if (is_diag[static_cast<size_t>(col)]) diag_sum += v;
        if (diag_sum != 0) ++violations;
    });
    CHECK(rows == 127788);
    CHECK(violations == 0);
}

TEST_CASE("streaming and dense paths agree for small d") {
    for (int d : {2, 3, 4, 5, 6}) {
        RigidityResult a = solution_space(build_system(d));
        RigidityResult b = rigidity_verdict(d);
        CHECK(a.nullspace_dim == b.nullspace_dim);
        CHECK(a.basis_is_identity == b.basis_is_identity);
    }
}
