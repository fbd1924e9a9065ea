#include "covlat/qform.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace covlat {

namespace {

// Q = L D L^t with unit lower triangular L, so that
// Q[x] = sum_i d_i (x_i + sum_{j>i} L[j][i] x_j)^2.
struct Ldl {
    int n;
    RatMat l;    // l[i][j], j < i
    RatVec d;

    explicit Ldl(const SymMatrix& q) : n(q.dim()), l(n, RatVec(n, Rational(0))), d(n) {
        for (int k = 0; k < n; ++k) {
            Rational dk = q.at(k, k);
            for (int j = 0; j < k; ++j) dk -= l[k][j] * l[k][j] * d[j];
            d[k] = dk;
            for (int i = k + 1; i < n; ++i) {
                Rational v = q.at(i, k);
                for (int j = 0; j < k; ++j) v -= l[i][j] * l[k][j] * d[j];
                l[i][k] = v / dk;
            }
        }
    }
};

struct ShellSearch {
    const Ldl& ldl;
    Rational norm;
    std::function<void(const IntVec&)> emit;

    IntVec x;

    void run_from_top(long top_value, bool top_all_zero) {
        x.assign(ldl.n, 0);
        x[ldl.n - 1] = top_value;
        Rational c0 = 0;  // no higher levels
        Rational term = Rational(top_value) + c0;
        Rational s = ldl.d[ldl.n - 1] * term * term;
        if (s > norm) return;
        descend(ldl.n - 2, s, top_all_zero && top_value == 0);
    }

    void descend(int i, const Rational& s, bool all_zero_above) {
        if (i < 0) {
            if (s == norm) {
                emit(x);
                IntVec neg(x.size());
                for (size_t k = 0; k < x.size(); ++k) neg[k] = -x[k];
                emit(neg);
            }
            return;
        }
        Rational ci = 0;
        for (int j = i + 1; j < ldl.n; ++j)
            if (x[j] != 0) ci += ldl.l[j][i] * x[j];
        Rational rem = norm - s;
        if (rem < 0) return;

        auto fits = [&](long t) {
            Rational u = Rational(t) + ci;
            return ldl.d[i] * u * u <= rem;
        };
        const double cf = ci.get_d();
        const double rf = std::sqrt(std::max(0.0, Rational(rem / ldl.d[i]).get_d()));
        long lo = static_cast<long>(std::floor(-cf - rf)) - 1;
        long hi = static_cast<long>(std::ceil(-cf + rf)) + 1;
        while (lo <= hi && !fits(lo)) ++lo;
        while (hi >= lo && !fits(hi)) --hi;
        while (lo <= hi && fits(lo - 1)) --lo;  // exact fix-up against float drift
        while (hi >= lo && fits(hi + 1)) ++hi;
        if (all_zero_above) lo = std::max(lo, 0L);  // antipodal halves added at emit

        for (long t = lo; t <= hi; ++t) {
            x[i] = t;
            Rational u = Rational(t) + ci;
            descend(i - 1, s + ldl.d[i] * u * u, all_zero_above && t == 0);
        }
        x[i] = 0;
    }
};

}  // namespace

void enumerate_shell_streaming(const PQF& q, const Rational& norm,
                               const std::function<void(const IntVec&)>& fn, int threads) {
    if (norm <= 0) throw std::invalid_argument("shell norm must be positive");
    Ldl ldl(q.matrix());
    const int n = ldl.n;

    // Top-level bound: d_{n-1} t^2 <= norm, t >= 0 (negation closure is
    // restored when emitting).
    std::vector<long> tops;
    {
        Rational lim = norm / ldl.d[n - 1];
        long t = 0;
        while (Rational(t) * t <= lim) {
            tops.push_back(t);
            ++t;
        }
    }

    if (threads <= 1 || tops.size() <= 1) {
        ShellSearch search{ldl, norm, fn, {}};
        for (long t : tops) search.run_from_top(t, true);
        return;
    }

    std::vector<std::vector<IntVec>> found(tops.size());
    std::vector<std::thread> pool;
    std::atomic_size_t next{0};
    auto worker = [&]() {
        for (;;) {
            size_t k = next.fetch_add(1);
            if (k >= tops.size()) return;
            ShellSearch search{ldl, norm, [&](const IntVec& v) { found[k].push_back(v); }, {}};
            search.run_from_top(tops[k], true);
        }
    };
    int nt = std::min<int>(threads, static_cast<int>(tops.size()));
    for (int i = 0; i < nt; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (const auto& chunk : found)
        for (const auto& v : chunk) fn(v);
}

Shell enumerate_shell(const PQF& q, const Rational& norm, int threads) {
    Shell shell;
    shell.norm = norm;
    enumerate_shell_streaming(q, norm, [&](const IntVec& v) { shell.vectors.push_back(v); },
                              threads);
    std::sort(shell.vectors.begin(), shell.vectors.end());
    return shell;
}

namespace {

struct MinSearch {
    const Ldl& ldl;
    Rational best;
    IntVec x;

    void descend(int i, const Rational& s, bool all_zero_above) {
        if (i < 0) {
            if (s > 0 && s < best) best = s;
            return;
        }
        Rational ci = 0;
        for (int j = i + 1; j < ldl.n; ++j)
            if (x[j] != 0) ci += ldl.l[j][i] * x[j];
        Rational rem = best - s;
        if (rem < 0) return;
        auto fits = [&](long t) {
            Rational u = Rational(t) + ci;
            return ldl.d[i] * u * u <= rem;
        };
        const double cf = ci.get_d();
        const double rf = std::sqrt(std::max(0.0, Rational(rem / ldl.d[i]).get_d()));
        long lo = static_cast<long>(std::floor(-cf - rf)) - 1;
        long hi = static_cast<long>(std::ceil(-cf + rf)) + 1;
        while (lo <= hi && !fits(lo)) ++lo;
        while (hi >= lo && !fits(hi)) --hi;
        while (lo <= hi && fits(lo - 1)) --lo;
        while (hi >= lo && fits(hi + 1)) ++hi;
        if (all_zero_above) lo = std::max(lo, 0L);
        for (long t = lo; t <= hi; ++t) {
            x[i] = t;
            Rational u = Rational(t) + ci;
            Rational s2 = s + ldl.d[i] * u * u;
            if (s2 <= best) descend(i - 1, s2, all_zero_above && t == 0);
        }
        x[i] = 0;
    }
};

}  // namespace

Rational homogeneous_minimum(const PQF& q) {
    Ldl ldl(q.matrix());
    MinSearch search{ldl, q.matrix().at(0, 0), IntVec(ldl.n, 0)};
    for (int i = 0; i < ldl.n; ++i)
        if (q.matrix().at(i, i) < search.best) search.best = q.matrix().at(i, i);
    search.descend(ldl.n - 1, 0, true);
    return search.best;
}

// ---------------------------------------------------------------------------
// circumspheres

Circumsphere circumsphere_solve(const Simplex& s, const PQF& q) {
    const size_t d = s.vertices.empty() ? 0 : s.vertices[0].size();
    if (s.vertices.size() != d + 1) throw DegenerateSimplexError("simplex needs d+1 vertices");
    RatMat a;
    RatVec b;
    const RatVec& v0 = s.vertices[0];
    Rational q0 = evaluate(q.matrix(), v0);
    for (size_t i = 1; i <= d; ++i) {
        RatVec u = sub(s.vertices[i], v0);
        RatVec row = mat_apply(q.matrix(), u);
        for (auto& e : row) e *= 2;
        a.push_back(std::move(row));
        b.push_back(evaluate(q.matrix(), s.vertices[i]) - q0);
    }
    RatVec c;
    try {
        c = solve(a, b);
    } catch (const SingularMatrixError&) {
        throw DegenerateSimplexError("degenerate simplex");
    }
    return {c, evaluate(q.matrix(), sub(v0, c))};
}

Rational circumradius_sq_determinant(const Simplex& s, const PQF& q) {
    const size_t d = s.vertices.empty() ? 0 : s.vertices[0].size();
    if (s.vertices.size() != d + 1) throw DegenerateSimplexError("simplex needs d+1 vertices");
    const RatVec& v0 = s.vertices[0];
    RatMat u;
    for (size_t i = 1; i <= d; ++i) u.push_back(sub(s.vertices[i], v0));
    RatMat w(d, RatVec(d));
    for (size_t i = 0; i < d; ++i) {
        RatVec qu = mat_apply(q.matrix(), u[i]);
        for (size_t j = i; j < d; ++j) {
            Rational v = dot(qu, u[j]);
            w[i][j] = v;
            w[j][i] = v;
        }
    }
    Rational gram_det = determinant_rows(w);
    if (gram_det == 0) throw DegenerateSimplexError("degenerate simplex");
    RatMat bordered(d + 1, RatVec(d + 1, Rational(0)));
    for (size_t i = 0; i < d; ++i) {
        bordered[0][i + 1] = w[i][i];
        bordered[i + 1][0] = w[i][i];
        for (size_t j = 0; j < d; ++j) bordered[i + 1][j + 1] = w[i][j];
    }
    return Rational(-1, 4) * determinant_rows(bordered) / gram_det;
}

Rational apollonius_radius_sq(const Simplex& s, const PQF& q) {
    const size_t n = s.vertices.size();
    RatVec m(s.vertices[0].size(), Rational(0));
    for (const auto& v : s.vertices) m = add(m, v);
    m = scale(m, Rational(1, static_cast<long>(n)));
    Circumsphere cs = circumsphere_solve(s, q);
    Rational pair_sum = 0;
    for (size_t k = 0; k < n; ++k)
        for (size_t l = k + 1; l < n; ++l)
            pair_sum += evaluate(q.matrix(), sub(s.vertices[k], s.vertices[l]));
    return evaluate(q.matrix(), sub(cs.center, m)) +
           pair_sum / Rational(static_cast<long>(n * n));
}

Rational simplex_volume_scaled(const Simplex& s) {
    const size_t d = s.vertices.empty() ? 0 : s.vertices[0].size();
    if (s.vertices.size() != d + 1) throw DegenerateSimplexError("simplex needs d+1 vertices");
    RatMat u;
    for (size_t i = 1; i <= d; ++i) u.push_back(sub(s.vertices[i], s.vertices[0]));
    Rational det = determinant_rows(u);
    return det < 0 ? -det : det;
}

// ---------------------------------------------------------------------------
// moment forms and density bounds

MomentForm moment_form(const std::vector<Simplex>& simplices) {
    if (simplices.empty()) throw std::invalid_argument("moment_form: empty list");
    const size_t d = simplices[0].vertices[0].size();
    SymMatrix f(static_cast<int>(d));
    for (const auto& s : simplices) {
        if (s.vertices.size() != d + 1 || s.vertices[0].size() != d)
            throw DimensionMismatch("moment_form: mixed dimensions");
        for (size_t k = 0; k < s.vertices.size(); ++k)
            for (size_t l = k + 1; l < s.vertices.size(); ++l) {
                RatVec e = sub(s.vertices[k], s.vertices[l]);
                for (size_t i = 0; i < d; ++i) {
                    if (e[i] == 0) continue;
                    for (size_t j = i; j < d; ++j)
                        f.add_at(static_cast<int>(i), static_cast<int>(j), e[i] * e[j]);
                }
            }
    }
    const Rational c(1, static_cast<long>(simplices.size() * (d + 1)));
    return {f * c, static_cast<long>(simplices.size())};
}

DetSurfaceMin min_on_det_surface(const SymMatrix& f, const Rational& det_target, int d) {
    if (det_target <= 0) throw std::invalid_argument("det_target must be positive");
    if (!is_positive_definite(f)) throw std::invalid_argument("F is not positive definite");
    Rational det_f = determinant(f);
    (void)d;
    return {det_target * det_f, inverse(f)};
}

Rational covering_bound_sq(const SymMatrix& f, int d) {
    Rational det_f = determinant(f);
    if (det_f == 0) throw SingularMatrixError("moment form is singular");
    return rational_pow(Rational(d, d + 1), static_cast<unsigned>(d)) * det_f;
}

Rational covering_density_sq_ratio(const PQF& q, const Rational& mu) {
    return rational_pow(mu, static_cast<unsigned>(q.dim())) / determinant(q.matrix());
}

Rational gamma_sq(const PQF& q, const Rational& mu) {
    return Rational(4) * mu / homogeneous_minimum(q);
}

// ---------------------------------------------------------------------------
// pi enclosure and density verdicts

namespace {
// pi truncated to 70 decimal digits; the true value lies strictly between
// PI_LO and PI_LO + 10^-70.
const char* const kPiDigits70 =
    "3.1415926535897932384626433832795028841971693993751058209749445923078164";
}  // namespace

int pi_enclosure_digits() { return 70; }

Rational pi_lower() {
    static const Rational lo = rational_from_decimal(kPiDigits70);
    return lo;
}

Rational pi_upper() {
    static const Rational hi = pi_lower() + Rational(Integer(1), integer_pow(10, 70));
    return hi;
}

std::pair<Rational, Rational> kappa_sq_interval(int d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    if (d % 2 == 0) {
        Rational g(factorial(static_cast<unsigned>(d / 2)));
        Rational g2 = g * g;
        return {rational_pow(pi_lower(), d) / g2, rational_pow(pi_upper(), d) / g2};
    }
    // Gamma(d/2 + 1) = c * sqrt(pi) with rational c, so kappa_d^2 = pi^(d-1)/c^2.
    Rational c = Rational(factorial(static_cast<unsigned>(d + 1))) /
                 (rational_pow(Rational(4), static_cast<unsigned>((d + 1) / 2)) *
                  Rational(factorial(static_cast<unsigned>((d + 1) / 2))));
    Rational c2 = c * c;
    return {rational_pow(pi_lower(), d - 1) / c2, rational_pow(pi_upper(), d - 1) / c2};
}

std::string verdict_to_string(Verdict v) {
    switch (v) {
        case Verdict::less: return "less";
        case Verdict::greater: return "greater";
        default: return "inconclusive";
    }
}

Verdict compare_density_to_decimal(const Rational& theta_sq_ratio, const std::string& threshold,
                                   int d) {
    Rational thr = rational_from_decimal(threshold);
    if (thr <= 0) throw std::invalid_argument("threshold must be positive");
    Rational thr_sq = thr * thr;
    auto [klo, khi] = kappa_sq_interval(d);
    Rational theta_sq_lo = theta_sq_ratio * klo;
    Rational theta_sq_hi = theta_sq_ratio * khi;
    if (theta_sq_hi < thr_sq) return Verdict::less;
    if (theta_sq_lo > thr_sq) return Verdict::greater;
    return Verdict::inconclusive;
}

}  // namespace covlat
