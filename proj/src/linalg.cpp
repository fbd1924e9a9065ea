#include "covlat/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace covlat {

// ---------------------------------------------------------------------------
// vector helpers

RatVec rat_vec(std::initializer_list<long> entries) {
    RatVec v;
    v.reserve(entries.size());
    for (long e : entries) v.emplace_back(e);
    return v;
}

RatVec add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector add");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sub");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec scale(const RatVec& a, const Rational& c) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

RatVec negate(const RatVec& a) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot");
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool lex_less(const RatVec& a, const RatVec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

bool is_zero(const RatVec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// SymMatrix / PQF

SymMatrix SymMatrix::identity(int d) {
    SymMatrix m(d);
    for (int i = 0; i < d; ++i) m.set(i, i, 1);
    return m;
}

void SymMatrix::set(int i, int j, const Rational& v) {
    a_[static_cast<size_t>(i) * d_ + j] = v;
    a_[static_cast<size_t>(j) * d_ + i] = v;
}

void SymMatrix::add_at(int i, int j, const Rational& v) {
    a_[static_cast<size_t>(i) * d_ + j] += v;
    if (i != j) a_[static_cast<size_t>(j) * d_ + i] += v;
}

SymMatrix SymMatrix::operator+(const SymMatrix& o) const {
    if (d_ != o.d_) throw DimensionMismatch("matrix add");
    SymMatrix r(d_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

SymMatrix SymMatrix::operator-(const SymMatrix& o) const {
    if (d_ != o.d_) throw DimensionMismatch("matrix sub");
    SymMatrix r(d_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

SymMatrix SymMatrix::operator*(const Rational& c) const {
    SymMatrix r(d_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

Rational SymMatrix::trace() const {
    Rational t = 0;
    for (int i = 0; i < d_; ++i) t += at(i, i);
    return t;
}

Rational frobenius(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("frobenius");
    Rational s = 0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) s += a.at(i, j) * b.at(i, j);
    return s;
}

PQF::PQF(SymMatrix m) : m_(std::move(m)) {
    if (!is_positive_definite(m_)) throw std::invalid_argument("matrix is not positive definite");
}

PQF PQF::trusted(SymMatrix m) {
    PQF q;
    q.m_ = std::move(m);
    return q;
}

// ---------------------------------------------------------------------------
// Bareiss elimination cores

namespace {

// Clears denominators: returns L*rows as integers together with L.
std::pair<IntMat, Integer> clear_denominators(const RatMat& rows) {
    Integer lcm = 1;
    for (const auto& row : rows)
        for (const auto& x : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    IntMat out(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        out[i].resize(rows[i].size());
        for (size_t j = 0; j < rows[i].size(); ++j) {
            Rational v = rows[i][j] * lcm;
            out[i][j] = v.get_num();  // exact: denominator is 1
        }
    }
    return {std::move(out), lcm};
}

// Fraction-free determinant; swaps rows when a pivot vanishes.
Integer bareiss_det(IntMat a) {
    const size_t n = a.size();
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

RatMat sym_to_rows(const SymMatrix& m) {
    RatMat rows(m.dim(), RatVec(m.dim()));
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) rows[i][j] = m.at(i, j);
    return rows;
}

// Forward fraction-free elimination of the augmented system [a | rhs],
// then exact rational back substitution. Throws on singular a.
RatMat bareiss_solve(const RatMat& a, const RatMat& rhs_cols) {
    const size_t n = a.size();
    RatMat aug(n);
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw DimensionMismatch("solve: non-square");
        aug[i] = a[i];
        for (const auto& col : rhs_cols) aug[i].push_back(col[i]);
    }
    auto [m, scale] = clear_denominators(aug);
    (void)scale;  // scaling both sides leaves solutions unchanged
    const size_t w = n + rhs_cols.size();
    Integer prev = 1;
    for (size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) throw SingularMatrixError("singular matrix");
            std::swap(m[k], m[r]);
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < w; ++j) {
                Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    RatMat x(rhs_cols.size(), RatVec(n));
    for (size_t c = 0; c < rhs_cols.size(); ++c) {
        for (size_t i = n; i-- > 0;) {
            Rational s(m[i][n + c]);
            for (size_t j = i + 1; j < n; ++j) s -= Rational(m[i][j]) * x[c][j];
            x[c][i] = s / Rational(m[i][i]);
        }
    }
    return x;
}

}  // namespace

Rational determinant_rows(const RatMat& rows) {
    const size_t n = rows.size();
    for (const auto& r : rows)
        if (r.size() != n) throw DimensionMismatch("determinant: non-square");
    auto [m, scale] = clear_denominators(rows);
    Integer d = bareiss_det(std::move(m));
    Rational r(d);
    r /= rational_pow(Rational(scale), static_cast<unsigned>(n));
    return r;
}

Rational determinant(const SymMatrix& m) { return determinant_rows(sym_to_rows(m)); }

bool is_positive_definite(const SymMatrix& m) {
    // No-swap Bareiss: the pivot entering step k equals the k-th leading
    // principal minor (of the scaled matrix; scaling preserves signs).
    auto [a, scale] = clear_denominators(sym_to_rows(m));
    (void)scale;
    const size_t n = a.size();
    Integer prev = 1;
    for (size_t k = 0; k < n; ++k) {
        if (a[k][k] <= 0) return false;
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return true;
}

SymMatrix inverse(const SymMatrix& m) {
    const int n = m.dim();
    RatMat id_cols(n, RatVec(n, Rational(0)));
    for (int i = 0; i < n; ++i) id_cols[i][i] = 1;
    RatMat cols = bareiss_solve(sym_to_rows(m), id_cols);
    SymMatrix inv(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) inv.set(i, j, cols[j][i]);
    return inv;
}

RatVec solve(const RatMat& a, const RatVec& b) {
    RatMat x = bareiss_solve(a, {b});
    return x[0];
}

RatMat nullspace(const RatMat& rows, int cols) {
    RowEliminator elim(cols);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols) throw DimensionMismatch("nullspace row length");
        elim.insert(r);
    }
    return elim.kernel();
}

Rational evaluate(const SymMatrix& q, const RatVec& v) {
    if (static_cast<int>(v.size()) != q.dim()) throw DimensionMismatch("evaluate");
    return bilinear(q, v, v);
}

Rational bilinear(const SymMatrix& q, const RatVec& u, const RatVec& v) {
    if (u.size() != v.size() || static_cast<int>(v.size()) != q.dim())
        throw DimensionMismatch("bilinear");
    Rational s = 0;
    for (int i = 0; i < q.dim(); ++i) {
        if (u[i] == 0) continue;
        Rational row = 0;
        for (int j = 0; j < q.dim(); ++j) row += q.at(i, j) * v[j];
        s += u[i] * row;
    }
    return s;
}

RatVec mat_apply(const SymMatrix& q, const RatVec& v) {
    if (static_cast<int>(v.size()) != q.dim()) throw DimensionMismatch("apply");
    RatVec r(v.size(), Rational(0));
    for (int i = 0; i < q.dim(); ++i)
        for (int j = 0; j < q.dim(); ++j) r[i] += q.at(i, j) * v[j];
    return r;
}

// ---------------------------------------------------------------------------
// RowEliminator

bool RowEliminator::insert(const RatVec& dense_row) {
    SparseRow row;
    for (int j = 0; j < cols_; ++j)
        if (dense_row[j] != 0) row.emplace_back(j, dense_row[j]);
    return insert_sparse(std::move(row));
}

bool RowEliminator::insert_sparse(SparseRow row) {
    while (!row.empty()) {
        int lead = row.front().first;
        int p = pivot_of_col_[lead];
        if (p < 0) {
            // Normalize leading coefficient to 1 and store.
            Rational inv_lead = 1 / row.front().second;
            for (auto& [c, v] : row) v *= inv_lead;
            pivot_of_col_[lead] = static_cast<int>(rows_.size());
            lead_.push_back(lead);
            rows_.push_back(std::move(row));
            return true;
        }
        // row -= row.front() * rows_[p]   (sparse merge; pivot row leads with 1)
        const Rational c = row.front().second;
        const SparseRow& pr = rows_[p];
        SparseRow merged;
        merged.reserve(row.size() + pr.size());
        size_t i = 0, j = 0;
        while (i < row.size() || j < pr.size()) {
            if (j == pr.size() || (i < row.size() && row[i].first < pr[j].first)) {
                merged.push_back(row[i++]);
            } else if (i == row.size() || pr[j].first < row[i].first) {
                merged.emplace_back(pr[j].first, -c * pr[j].second);
                ++j;
            } else {
                Rational v = row[i].second - c * pr[j].second;
                if (v != 0) merged.emplace_back(row[i].first, v);
                ++i;
                ++j;
            }
        }
        row = std::move(merged);
    }
    return false;
}

RatMat RowEliminator::kernel() const {
    // Back-reduce to full RREF on a dense copy, then read off the kernel.
    std::vector<size_t> order(rows_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return lead_[a] < lead_[b]; });

    RatMat rref;
    std::vector<int> pivots;
    for (size_t oi : order) {
        RatVec dense(cols_, Rational(0));
        for (const auto& [c, v] : rows_[oi]) dense[c] = v;
        rref.push_back(std::move(dense));
        pivots.push_back(lead_[oi]);
    }
    for (size_t i = rref.size(); i-- > 0;) {
        for (size_t k = 0; k < i; ++k) {
            const Rational c = rref[k][pivots[i]];
            if (c == 0) continue;
            for (int j = pivots[i]; j < cols_; ++j) rref[k][j] -= c * rref[i][j];
        }
    }
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    RatMat basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(cols_, Rational(0));
        v[f] = 1;
        for (size_t i = 0; i < rref.size(); ++i) v[pivots[i]] = -rref[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Hermite normal form

IntMat hermite_normal_form(const IntMat& rows_in) {
    IntMat rows = rows_in;
    const size_t n = rows.empty() ? 0 : rows[0].size();
    size_t r = 0;
    for (size_t col = 0; col < n && r < rows.size(); ++col) {
        // Euclid over the column entries below r until one nonzero remains.
        while (true) {
            size_t best = rows.size();
            for (size_t i = r; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() ||
                    cmp(abs(rows[i][col]), abs(rows[best][col])) < 0)
                    best = i;
            }
            if (best == rows.size()) break;  // column is zero below r
            std::swap(rows[r], rows[best]);
            bool others = false;
            for (size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
                for (size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][col] != 0) others = true;
            }
            if (!others) break;
        }
        if (rows[r][col] == 0) continue;
        if (rows[r][col] < 0)
            for (size_t j = 0; j < n; ++j) rows[r][j] = -rows[r][j];
        // Reduce the entries above the pivot.
        for (size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
            if (q != 0)
                for (size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

// ---------------------------------------------------------------------------
// LLL on a Gram matrix

namespace {

struct Gso {
    RatMat mu;        // mu[i][j], j < i
    RatVec bstar_sq;  // squared GSO norms

    void compute(const SymMatrix& g) {
        const int n = g.dim();
        mu.assign(n, RatVec(n, Rational(0)));
        bstar_sq.assign(n, Rational(0));
        RatMat r(n, RatVec(n, Rational(0)));  // r[i][j] = <b_i, b*_j>
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j <= i; ++j) {
                Rational s = g.at(i, j);
                for (int k = 0; k < j; ++k) s -= mu[j][k] * r[i][k];
                r[i][j] = s;
                if (j < i) mu[i][j] = s / bstar_sq[j];
            }
            bstar_sq[i] = r[i][i];
        }
    }
};

void gram_row_op(SymMatrix& g, IntMat& u, int i, int j, const Integer& q) {
    // b_i <- b_i - q b_j
    const int n = g.dim();
    for (size_t k = 0; k < u[i].size(); ++k) u[i][k] -= q * u[j][k];
    Rational qr(q);
    RatVec new_row(n);
    for (int k = 0; k < n; ++k) new_row[k] = g.at(i, k) - qr * g.at(j, k);
    // row update, then the symmetric column update (diagonal needs both)
    Rational gii = g.at(i, i) - qr * g.at(j, i) - qr * (g.at(i, j) - qr * g.at(j, j));
    for (int k = 0; k < n; ++k)
        if (k != i) g.set(i, k, new_row[k]);
    g.set(i, i, gii);
}

void gram_swap(SymMatrix& g, IntMat& u, int i, int j) {
    const int n = g.dim();
    std::swap(u[i], u[j]);
    for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        Rational a = g.at(i, k), b = g.at(j, k);
        g.set(i, k, b);
        g.set(j, k, a);
    }
    Rational gii = g.at(i, i), gjj = g.at(j, j);
    g.set(i, i, gjj);
    g.set(j, j, gii);
}

}  // namespace

IntMat lll_reduce_gram(SymMatrix& gram) {
    const int n = gram.dim();
    IntMat u(n, std::vector<Integer>(n, Integer(0)));
    for (int i = 0; i < n; ++i) u[i][i] = 1;
    const Rational delta(3, 4);
    Gso gso;
    gso.compute(gram);
    int k = 1;
    while (k < n) {
        for (int j = k - 1; j >= 0; --j) {
            Integer q = round_rat(gso.mu[k][j]);
            if (q != 0) {
                gram_row_op(gram, u, k, j, q);
                gso.compute(gram);
            }
        }
        Rational lhs = gso.bstar_sq[k];
        Rational rhs = (delta - gso.mu[k][k - 1] * gso.mu[k][k - 1]) * gso.bstar_sq[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            gram_swap(gram, u, k - 1, k);
            gso.compute(gram);
            k = std::max(k - 1, 1);
        }
    }
    return u;
}

}  // namespace covlat
