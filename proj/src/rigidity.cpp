#include "covlat/rigidity.hpp"

namespace covlat {

int sym_index(int d, int i, int j) {
    if (i > j) std::swap(i, j);
    // row-major upper triangle
    return i * d - i * (i - 1) / 2 + (j - i);
}

void for_each_constraint_row(int d, const std::function<void(const RowEliminator::SparseRow&)>& fn) {
    if (d < 2) throw std::invalid_argument("rigidity systems need d >= 2");
    RowEliminator::SparseRow row;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            row = {{sym_index(d, i, i), Rational(1)}, {sym_index(d, j, j), Rational(-1)}};
            std::sort(row.begin(), row.end());
            fn(row);
        }
    // Sign patterns over distinct i<j, k<l with {i,j} < {k,l} disjoint; the
    // global sign is quotiented out by fixing the coefficient of c_ik to +1.
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                if (k == i || k == j) continue;
                for (int l = k + 1; l < d; ++l) {
                    if (l == i || l == j) continue;
                    if (std::make_pair(k, l) <= std::make_pair(i, j)) continue;
                    for (int s1 = -1; s1 <= 1; s1 += 2)
                        for (int s2 = -1; s2 <= 1; s2 += 2) {
                            row = {{sym_index(d, i, k), Rational(1)},
                                   {sym_index(d, i, l), Rational(s1)},
                                   {sym_index(d, j, k), Rational(s2)},
                                   {sym_index(d, j, l), Rational(s1 * s2)}};
                            std::sort(row.begin(), row.end());
                            fn(row);
                        }
                }
            }
}

RigiditySystem build_system(int d) {
    RigiditySystem s;
    s.d = d;
    const int cols = d * (d + 1) / 2;
    for_each_constraint_row(d, [&](const RowEliminator::SparseRow& row) {
        RatVec dense(cols, Rational(0));
        for (const auto& [c, v] : row) dense[c] = v;
        s.rows.push_back(std::move(dense));
    });
    return s;
}

namespace {

RigidityResult result_from_kernel(int d, const RatMat& kernel) {
    RigidityResult r;
    r.dimension = d;
    r.nullspace_dim = static_cast<int>(kernel.size());
    if (r.nullspace_dim == 1) {
        const RatVec& b = kernel[0];
        const Rational& lead = b[sym_index(d, 0, 0)];
        bool ok = lead != 0;
        for (int i = 0; i < d && ok; ++i)
            for (int j = i; j < d && ok; ++j)
                if (b[sym_index(d, i, j)] != (i == j ? lead : 0)) ok = false;
        r.basis_is_identity = ok;
    }
    return r;
}

}  // namespace

RigidityResult solution_space(const RigiditySystem& s) {
    const int cols = s.d * (s.d + 1) / 2;
    RowEliminator elim(cols);
    // The identity matrix annihilates every row, so the rank can never
    // exceed cols - 1; stop as soon as it is reached.
    for (const auto& row : s.rows) {
        elim.insert(row);
        if (elim.rank() == cols - 1) break;
    }
    return result_from_kernel(s.d, elim.kernel());
}

RigidityResult rigidity_verdict(int d) {
    const int cols = d * (d + 1) / 2;
    RowEliminator elim(cols);
    bool saturated = false;
    for_each_constraint_row(d, [&](const RowEliminator::SparseRow& row) {
        if (saturated) return;
        elim.insert_sparse(row);
        if (elim.rank() == cols - 1) saturated = true;
    });
    return result_from_kernel(d, elim.kernel());
}

}  // namespace covlat
