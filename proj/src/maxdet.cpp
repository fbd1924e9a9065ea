#include "covlat/maxdet.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "covlat/lp.hpp"

namespace covlat {

// ---------------------------------------------------------------------------
// invariant subspace

InvariantSubspace::InvariantSubspace() {
    SymMatrix b1(8), b2(8), b3(8), b4(8);
    b1.set(0, 0, 1);
    for (int i = 1; i < 8; ++i) {
        b2.set(0, i, 1);
        b3.set(i, i, 1);
        for (int j = i + 1; j < 8; ++j) b4.set(i, j, 1);
    }
    basis_ = {b1, b2, b3, b4};
}

SymMatrix InvariantSubspace::embed(const RatVec& p) const {
    if (p.size() != 4) throw DimensionMismatch("invariant embed");
    SymMatrix q(8);
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 8; ++i)
            for (int j = i; j < 8; ++j)
                if (basis_[static_cast<size_t>(k)].at(i, j) != 0)
                    q.add_at(i, j, p[static_cast<size_t>(k)] *
                                       basis_[static_cast<size_t>(k)].at(i, j));
    return q;
}

RatVec InvariantSubspace::project(const SymMatrix& m) const {
    if (m.dim() != 8) throw DimensionMismatch("invariant project");
    RatVec p(4, Rational(0));
    p[0] = m.at(0, 0);
    for (int i = 1; i < 8; ++i) {
        p[1] += m.at(0, i);
        p[2] += m.at(i, i);
        for (int j = i + 1; j < 8; ++j) p[3] += m.at(i, j);
    }
    p[1] /= 7;
    p[2] /= 7;
    p[3] /= 21;
    return p;
}

// ---------------------------------------------------------------------------
// regulator coefficients in parameter space

namespace {

// <form matrix, B_k> for the four invariant basis elements.
RatVec parameter_coefficients(const SymMatrix& m) {
    RatVec a(4, Rational(0));
    a[0] = m.at(0, 0);
    for (int i = 1; i < 8; ++i) {
        a[1] += 2 * m.at(0, i);
        a[2] += m.at(i, i);
        for (int j = i + 1; j < 8; ++j) a[3] += 2 * m.at(i, j);
    }
    return a;
}

std::string vec_key(const RatVec& v) {
    std::ostringstream os;
    for (const auto& x : v) os << x.get_str() << ',';
    return os.str();
}

RatVec interior_params(const RegulatorSet& regs) {
    std::map<std::string, RatVec> unique;
    for (const auto& r : regs.regulators) {
        RatVec a = parameter_coefficients(r.form_matrix());
        unique.emplace(vec_key(a), std::move(a));
    }
    // max margin m: a . p >= m for all unique forms, parameters boxed
    // around the identity form (1, 0, 1, 0).
    const RatVec center = rat_vec({1, 0, 1, 0});
    RatMat lp_a;
    RatVec lp_b;
    for (const auto& [k, a] : unique) {
        (void)k;
        RatVec row(5, Rational(0));
        for (int i = 0; i < 4; ++i) row[static_cast<size_t>(i)] = -a[static_cast<size_t>(i)];
        row[4] = 1;
        lp_a.push_back(row);
        lp_b.push_back(0);
    }
    for (int i = 0; i < 4; ++i) {
        RatVec hi(5, Rational(0)), lo(5, Rational(0));
        hi[static_cast<size_t>(i)] = 1;
        lo[static_cast<size_t>(i)] = -1;
        lp_a.push_back(hi);
        lp_b.push_back(center[static_cast<size_t>(i)] + Rational(1, 2));
        lp_a.push_back(lo);
        lp_b.push_back(Rational(1, 2) - center[static_cast<size_t>(i)]);
    }
    RatVec obj(5, Rational(0));
    obj[4] = 1;
    LPResult lp = lp_maximize(lp_a, lp_b, obj);
    if (lp.status != LPStatus::optimal || lp.value <= 0)
        throw InfeasibleTriangulation("no interior point: regulator system infeasible");
    return {lp.x[0], lp.x[1], lp.x[2], lp.x[3]};
}

}  // namespace

PQF interior_point(const RegulatorSet& regs) {
    InvariantSubspace space;
    RatVec p = interior_params(regs);
    SymMatrix q = space.embed(p);
    // Walk toward the identity form until positive definite; regulator
    // positivity survives (type 1/2 are positive at the identity, type 3
    // vanish there, and all are linear).
    SymMatrix id = SymMatrix::identity(8);
    Rational s(1);
    for (int tries = 0; tries < 64; ++tries) {
        SymMatrix cand = id + (q - id) * s;
        if (is_positive_definite(cand)) {
            for (const auto& r : regs.regulators)
                if (r.evaluate(cand) <= 0)
                    throw std::logic_error("interior point lost strict positivity");
            return PQF::trusted(std::move(cand));
        }
        s /= 2;
    }
    throw std::logic_error("interior point: positive definite shrink failed");
}

// ---------------------------------------------------------------------------
// dense double helpers (8x8)

namespace {

constexpr int kD = 8;

bool chol8(const double* a, double* l) {
    for (int i = 0; i < kD * kD; ++i) l[i] = 0;
    for (int j = 0; j < kD; ++j) {
        double d = a[j * kD + j];
        for (int k = 0; k < j; ++k) d -= l[j * kD + k] * l[j * kD + k];
        if (!(d > 0)) return false;
        double lj = std::sqrt(d);
        l[j * kD + j] = lj;
        for (int i = j + 1; i < kD; ++i) {
            double s = a[i * kD + j];
            for (int k = 0; k < j; ++k) s -= l[i * kD + k] * l[j * kD + k];
            l[i * kD + j] = s / lj;
        }
    }
    return true;
}

double chol_logdet(const double* l) {
    double s = 0;
    for (int i = 0; i < kD; ++i) s += std::log(l[i * kD + i]);
    return 2 * s;
}

void chol_solve(const double* l, const double* b, double* x) {
    double y[kD];
    for (int i = 0; i < kD; ++i) {
        double s = b[i];
        for (int k = 0; k < i; ++k) s -= l[i * kD + k] * y[k];
        y[i] = s / l[i * kD + i];
    }
    for (int i = kD - 1; i >= 0; --i) {
        double s = y[i];
        for (int k = i + 1; k < kD; ++k) s -= l[k * kD + i] * x[k];
        x[i] = s / l[i * kD + i];
    }
}

// squared circumradius from the edge gram W: solve W z = diag(W)/2,
// r^2 = diag(W) . z / 2; NaN when W is not positive definite.
double radius_sq_from_gram(const double* w) {
    double l[kD * kD], b[kD], z[kD];
    if (!chol8(w, l)) return std::numeric_limits<double>::quiet_NaN();
    for (int i = 0; i < kD; ++i) b[i] = 0.5 * w[i * kD + i];
    chol_solve(l, b, z);
    double r = 0;
    for (int i = 0; i < kD; ++i) r += b[i] * z[i];
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// optimizer

CoveringOptimizer::CoveringOptimizer(const E8Model& model, const PeriodicTriangulation& t,
                                     const RegulatorSet& regs) {
    // unique regulator coefficient vectors with multiplicities
    std::map<std::string, size_t> seen;
    for (const auto& r : regs.regulators) {
        RatVec a = parameter_coefficients(r.form_matrix());
        std::string k = vec_key(a);
        auto it = seen.find(k);
        if (it == seen.end()) {
            seen.emplace(k, reg_coeffs_.size());
            reg_coeffs_.push_back(std::move(a));
            reg_multiplicity_.push_back(1);
        } else {
            reg_multiplicity_[it->second] += 1;
        }
    }

    // per-simplex gram decompositions W(p) = sum_k p_k (U B_k U^t)
    for (const Simplex& s : representative_simplices(model, t)) {
        SimplexClass cls;
        cls.multiplicity = 1;
        // edge data: u0 = first coordinate, srest = sum of the rest,
        // so the four bilinear forms follow from scalar products
        std::array<RatVec, kD> edges;
        RatVec u0(kD), srest(kD);
        for (int i = 0; i < kD; ++i) {
            edges[static_cast<size_t>(i)] = s.vertices[static_cast<size_t>(i + 1)];
            u0[static_cast<size_t>(i)] = edges[static_cast<size_t>(i)][0];
            Rational acc = 0;
            for (int c = 1; c < kD; ++c) acc += edges[static_cast<size_t>(i)][static_cast<size_t>(c)];
            srest[static_cast<size_t>(i)] = acc;
        }
        for (int i = 0; i < kD; ++i)
            for (int j = i; j < kD; ++j) {
                Rational dot7 = 0;
                for (int c = 1; c < kD; ++c)
                    dot7 += edges[static_cast<size_t>(i)][static_cast<size_t>(c)] *
                            edges[static_cast<size_t>(j)][static_cast<size_t>(c)];
                Rational b1 = u0[static_cast<size_t>(i)] * u0[static_cast<size_t>(j)];
                Rational b2 = u0[static_cast<size_t>(i)] * srest[static_cast<size_t>(j)] +
                              u0[static_cast<size_t>(j)] * srest[static_cast<size_t>(i)];
                Rational b4 = srest[static_cast<size_t>(i)] * srest[static_cast<size_t>(j)] - dot7;
                const Rational* vals[4] = {&b1, &b2, &dot7, &b4};
                for (int k = 0; k < 4; ++k) {
                    double v = vals[k]->get_d();
                    cls.gram_parts[static_cast<size_t>(k)][static_cast<size_t>(i * kD + j)] = v;
                    cls.gram_parts[static_cast<size_t>(k)][static_cast<size_t>(j * kD + i)] = v;
                }
            }
        simplex_classes_.push_back(std::move(cls));
    }

    start_params_ = interior_params(regs);
}

bool CoveringOptimizer::strictly_feasible(const std::array<double, 4>& p) const {
    return std::isfinite(barrier(p, 1.0));
}

double CoveringOptimizer::barrier(const std::array<double, 4>& p, double t) const {
    const double inf = std::numeric_limits<double>::infinity();
    double q[kD * kD] = {0};
    q[0] = p[0];
    for (int i = 1; i < kD; ++i) {
        q[i] = p[1];
        q[i * kD] = p[1];
        q[i * kD + i] = p[2];
        for (int j = 1; j < kD; ++j)
            if (j != i) q[i * kD + j] = p[3];
    }
    double l[kD * kD];
    if (!chol8(q, l)) return -inf;
    double phi = t * chol_logdet(l);

    for (size_t j = 0; j < reg_coeffs_.size(); ++j) {
        double v = 0;
        for (int k = 0; k < 4; ++k) v += reg_coeffs_[j][static_cast<size_t>(k)].get_d() * p[static_cast<size_t>(k)];
        if (!(v > 0)) return -inf;
        phi += reg_multiplicity_[j] * std::log(v);
    }
    double w[kD * kD];
    for (const auto& cls : simplex_classes_) {
        for (int e = 0; e < kD * kD; ++e)
            w[e] = p[0] * cls.gram_parts[0][static_cast<size_t>(e)] +
                   p[1] * cls.gram_parts[1][static_cast<size_t>(e)] +
                   p[2] * cls.gram_parts[2][static_cast<size_t>(e)] +
                   p[3] * cls.gram_parts[3][static_cast<size_t>(e)];
        double r2 = radius_sq_from_gram(w);
        if (!(r2 < 1.0)) return -inf;
        phi += cls.multiplicity * std::log(1.0 - r2);
    }
    return phi;
}

std::array<double, 4> CoveringOptimizer::barrier_gradient(const std::array<double, 4>& p, double t,
                                                          double step) const {
    std::array<double, 4> g{};
    for (int k = 0; k < 4; ++k) {
        std::array<double, 4> hi = p, lo = p;
        hi[static_cast<size_t>(k)] += step;
        lo[static_cast<size_t>(k)] -= step;
        g[static_cast<size_t>(k)] = (barrier(hi, t) - barrier(lo, t)) / (2 * step);
    }
    return g;
}

double CoveringOptimizer::max_radius_sq(const std::array<double, 4>& p) const {
    double worst = -std::numeric_limits<double>::infinity();
    double w[kD * kD];
    for (const auto& cls : simplex_classes_) {
        for (int e = 0; e < kD * kD; ++e)
            w[e] = p[0] * cls.gram_parts[0][static_cast<size_t>(e)] +
                   p[1] * cls.gram_parts[1][static_cast<size_t>(e)] +
                   p[2] * cls.gram_parts[2][static_cast<size_t>(e)] +
                   p[3] * cls.gram_parts[3][static_cast<size_t>(e)];
        double r2 = radius_sq_from_gram(w);
        if (std::isnan(r2)) return std::numeric_limits<double>::quiet_NaN();
        worst = std::max(worst, r2);
    }
    return worst;
}

double CoveringOptimizer::det_at(const std::array<double, 4>& p) const {
    double q[kD * kD] = {0};
    q[0] = p[0];
    for (int i = 1; i < kD; ++i) {
        q[i] = p[1];
        q[i * kD] = p[1];
        q[i * kD + i] = p[2];
        for (int j = 1; j < kD; ++j)
            if (j != i) q[i * kD + j] = p[3];
    }
    double l[kD * kD];
    if (!chol8(q, l)) return std::numeric_limits<double>::quiet_NaN();
    return std::exp(chol_logdet(l));
}

OptimizeResult CoveringOptimizer::run(const OptimizeOptions& opts) const {
    // start from the exact interior point, scaled so the largest
    // circumradius is comfortably inside the bound
    std::array<double, 4> p{};
    for (int k = 0; k < 4; ++k) p[static_cast<size_t>(k)] = start_params_[static_cast<size_t>(k)].get_d();
    {
        double mu0 = max_radius_sq(p);
        double s = 0.5 / mu0;
        for (auto& v : p) v *= s;
    }
    if (opts.restart_seed != 0) {
        std::mt19937 rng(opts.restart_seed);
        std::uniform_real_distribution<double> jitter(-0.05, 0.05);
        for (int tries = 0; tries < 100; ++tries) {
            std::array<double, 4> cand = p;
            for (auto& v : cand) v *= (1.0 + jitter(rng));
            double mu0 = max_radius_sq(cand);
            if (std::isfinite(mu0) && mu0 > 0) {
                double s = 0.5 / mu0;
                for (auto& v : cand) v *= s;
                if (strictly_feasible(cand)) {
                    p = cand;
                    break;
                }
            }
        }
    }

    // normalized barrier log det + (1/t) (logs); same maximizer, gradients O(1)
    auto phi = [&](const std::array<double, 4>& x, double t) { return barrier(x, t) / t; };

    OptimizeResult res;
    double t = 1.0;
    double det_prev = 0.0;
    for (int outer = 0; outer < 200; ++outer) {
        for (int inner = 0; inner < 80; ++inner) {
            const double f0 = phi(p, t);
            std::array<double, 4> g{};
            const double hg = 1e-7;
            for (int k = 0; k < 4; ++k) {
                auto hi = p, lo = p;
                hi[static_cast<size_t>(k)] += hg;
                lo[static_cast<size_t>(k)] -= hg;
                g[static_cast<size_t>(k)] = (phi(hi, t) - phi(lo, t)) / (2 * hg);
            }
            double gnorm = 0;
            for (double v : g) gnorm = std::max(gnorm, std::fabs(v));
            if (gnorm < 1e-10 * (1 + std::fabs(f0))) break;

            // finite-difference Hessian
            double h[16];
            const double hh = 1e-4;
            for (int a = 0; a < 4; ++a)
                for (int b = a; b < 4; ++b) {
                    auto pp = p, pm = p, mp = p, mm = p;
                    pp[static_cast<size_t>(a)] += hh;
                    pp[static_cast<size_t>(b)] += hh;
                    pm[static_cast<size_t>(a)] += hh;
                    pm[static_cast<size_t>(b)] -= hh;
                    mp[static_cast<size_t>(a)] -= hh;
                    mp[static_cast<size_t>(b)] += hh;
                    mm[static_cast<size_t>(a)] -= hh;
                    mm[static_cast<size_t>(b)] -= hh;
                    double v = (phi(pp, t) - phi(pm, t) - phi(mp, t) + phi(mm, t)) / (4 * hh * hh);
                    h[a * 4 + b] = v;
                    h[b * 4 + a] = v;
                }
            // Newton direction: solve (-H) d = g; fall back to gradient
            std::array<double, 4> dir = g;
            {
                double m[16];
                for (int e = 0; e < 16; ++e) m[e] = -h[e];
                // tiny Cholesky with fallback
                double lch[16] = {0};
                bool ok = true;
                for (int j = 0; j < 4 && ok; ++j) {
                    double d = m[j * 4 + j];
                    for (int k = 0; k < j; ++k) d -= lch[j * 4 + k] * lch[j * 4 + k];
                    if (!(d > 0)) {
                        ok = false;
                        break;
                    }
                    lch[j * 4 + j] = std::sqrt(d);
                    for (int i = j + 1; i < 4; ++i) {
                        double s = m[i * 4 + j];
                        for (int k = 0; k < j; ++k) s -= lch[i * 4 + k] * lch[j * 4 + k];
                        lch[i * 4 + j] = s / lch[j * 4 + j];
                    }
                }
                if (ok) {
                    double y[4], x[4];
                    for (int i = 0; i < 4; ++i) {
                        double s = g[static_cast<size_t>(i)];
                        for (int k = 0; k < i; ++k) s -= lch[i * 4 + k] * y[k];
                        y[i] = s / lch[i * 4 + i];
                    }
                    for (int i = 3; i >= 0; --i) {
                        double s = y[i];
                        for (int k = i + 1; k < 4; ++k) s -= lch[k * 4 + i] * x[k];
                        x[i] = s / lch[i * 4 + i];
                    }
                    for (int i = 0; i < 4; ++i) dir[static_cast<size_t>(i)] = x[i];
                }
            }
            double tau = 1.0;
            bool moved = false;
            for (int bt = 0; bt < 60; ++bt) {
                std::array<double, 4> cand = p;
                for (int k = 0; k < 4; ++k) cand[static_cast<size_t>(k)] += tau * dir[static_cast<size_t>(k)];
                double f1 = phi(cand, t);
                if (std::isfinite(f1) && f1 > f0) {
                    p = cand;
                    moved = true;
                    break;
                }
                tau /= 2;
            }
            if (!moved) break;
        }
        double det_now = det_at(p);
        res.outer_iterations = outer + 1;
        if (t >= opts.t_final &&
            std::fabs(det_now - det_prev) <= opts.rel_tol * std::fabs(det_now))
            break;
        det_prev = det_now;
        t = std::min(t * 8, opts.t_final * 1.0000001);
    }

    // The barrier phase pins down the optimal face; finite differences lose
    // accuracy once regulator slacks shrink below the step size, so the
    // position along the face is refined with the scale-invariant objective
    // det(p)/mu(p)^8 restricted to the active-regulator nullspace.
    for (int round = 0; round < 4; ++round) {
        std::vector<size_t> active;
        for (size_t j = 0; j < reg_coeffs_.size(); ++j) {
            double v = 0;
            for (int k = 0; k < 4; ++k)
                v += reg_coeffs_[j][static_cast<size_t>(k)].get_d() * p[static_cast<size_t>(k)];
            if (v < 1e-4) active.push_back(j);
        }
        if (!polish_on_face(p, active)) break;
    }

    res.params = p;
    res.det = det_at(p);
    res.mu = max_radius_sq(p);
    const double kappa8 = std::pow(M_PI, 4) / 24.0;
    res.theta = std::sqrt(std::pow(res.mu, 8) / res.det) * kappa8;
    for (size_t j = 0; j < reg_coeffs_.size(); ++j) {
        double v = 0;
        for (int k = 0; k < 4; ++k)
            v += reg_coeffs_[j][static_cast<size_t>(k)].get_d() * p[static_cast<size_t>(k)];
        if (v < 1e-6) res.active_regulators.push_back(j);
    }
    for (const auto& cls : simplex_classes_) {
        double w[kD * kD];
        for (int e = 0; e < kD * kD; ++e)
            w[e] = p[0] * cls.gram_parts[0][static_cast<size_t>(e)] +
                   p[1] * cls.gram_parts[1][static_cast<size_t>(e)] +
                   p[2] * cls.gram_parts[2][static_cast<size_t>(e)] +
                   p[3] * cls.gram_parts[3][static_cast<size_t>(e)];
        if (1.0 - radius_sq_from_gram(w) < 1e-6) res.active_circumradius += 1;
    }
    return res;
}

bool CoveringOptimizer::polish_on_face(std::array<double, 4>& p,
                                       const std::vector<size_t>& active) const {
    // exact nullspace of the active rows, then orthonormalized in doubles
    RatMat rows;
    for (size_t j : active) rows.push_back(reg_coeffs_[j]);
    RatMat kernel = nullspace(rows, 4);
    const size_t dim_v = kernel.size();
    if (dim_v == 0) return false;

    std::vector<std::array<double, 4>> basis;
    for (const auto& kv : kernel) {
        std::array<double, 4> b{};
        for (int k = 0; k < 4; ++k) b[static_cast<size_t>(k)] = kv[static_cast<size_t>(k)].get_d();
        for (const auto& prev : basis) {
            double d = 0;
            for (int k = 0; k < 4; ++k) d += b[static_cast<size_t>(k)] * prev[static_cast<size_t>(k)];
            for (int k = 0; k < 4; ++k) b[static_cast<size_t>(k)] -= d * prev[static_cast<size_t>(k)];
        }
        double n = 0;
        for (double v : b) n += v * v;
        n = std::sqrt(n);
        if (n < 1e-12) continue;
        for (auto& v : b) v /= n;
        basis.push_back(b);
    }
    if (basis.empty()) return false;

    // u0 = projection of p into the face
    std::array<double, 4> u0{};
    for (const auto& b : basis) {
        double d = 0;
        for (int k = 0; k < 4; ++k) d += p[static_cast<size_t>(k)] * b[static_cast<size_t>(k)];
        for (int k = 0; k < 4; ++k) u0[static_cast<size_t>(k)] += d * b[static_cast<size_t>(k)];
    }

    std::set<size_t> active_set(active.begin(), active.end());
    auto objective = [&](const std::array<double, 4>& u) {
        double mu = max_radius_sq(u);
        double det = det_at(u);
        if (!std::isfinite(mu) || !std::isfinite(det) || mu <= 0 || det <= 0)
            return -std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < reg_coeffs_.size(); ++j) {
            if (active_set.count(j)) continue;
            double v = 0;
            for (int k = 0; k < 4; ++k)
                v += reg_coeffs_[j][static_cast<size_t>(k)].get_d() * u[static_cast<size_t>(k)];
            if (v <= 0) return -std::numeric_limits<double>::infinity();
        }
        return std::log(det) - 8 * std::log(mu);
    };

    std::array<double, 4> best = u0;
    if (basis.size() >= 2) {
        // directions transverse to u0 within the face
        std::vector<std::array<double, 4>> trans;
        {
            double n0 = 0;
            for (double v : u0) n0 += v * v;
            n0 = std::sqrt(n0);
            std::array<double, 4> u0n = u0;
            for (auto& v : u0n) v /= n0;
            for (const auto& b : basis) {
                std::array<double, 4> w = b;
                double d = 0;
                for (int k = 0; k < 4; ++k) d += w[static_cast<size_t>(k)] * u0n[static_cast<size_t>(k)];
                for (int k = 0; k < 4; ++k) w[static_cast<size_t>(k)] -= d * u0n[static_cast<size_t>(k)];
                double n = 0;
                for (double v : w) n += v * v;
                n = std::sqrt(n);
                if (n < 1e-9) continue;
                for (auto& v : w) v /= n;
                // re-orthogonalize against earlier transverse directions
                for (const auto& prev : trans) {
                    double dd = 0;
                    for (int k = 0; k < 4; ++k) dd += w[static_cast<size_t>(k)] * prev[static_cast<size_t>(k)];
                    for (int k = 0; k < 4; ++k) w[static_cast<size_t>(k)] -= dd * prev[static_cast<size_t>(k)];
                }
                double n2 = 0;
                for (double v : w) n2 += v * v;
                n2 = std::sqrt(n2);
                if (n2 < 1e-9) continue;
                for (auto& v : w) v /= n2;
                trans.push_back(w);
            }
        }
        const size_t nz = trans.size();
        if (nz == 0) {
            double mu0 = max_radius_sq(u0);
            if (std::isfinite(mu0) && mu0 > 0)
                for (int k = 0; k < 4; ++k) p[static_cast<size_t>(k)] = u0[static_cast<size_t>(k)] / mu0;
            return false;
        }
        auto at_z = [&](const std::vector<double>& z) {
            std::array<double, 4> u = u0;
            for (size_t i = 0; i < nz; ++i)
                for (int k = 0; k < 4; ++k) u[static_cast<size_t>(k)] += z[i] * trans[i][static_cast<size_t>(k)];
            return u;
        };
        // Nelder-Mead over z (nz <= 3), started at the origin
        std::vector<std::vector<double>> simplex;
        simplex.push_back(std::vector<double>(nz, 0.0));
        for (size_t i = 0; i < nz; ++i) {
            std::vector<double> v(nz, 0.0);
            v[i] = 0.02;
            simplex.push_back(v);
        }
        std::vector<double> fv(simplex.size());
        for (size_t i = 0; i < simplex.size(); ++i) fv[i] = objective(at_z(simplex[i]));
        for (int it = 0; it < 600; ++it) {
            // order descending (maximization)
            std::vector<size_t> idx(simplex.size());
            for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
            std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return fv[a] > fv[b]; });
            std::vector<std::vector<double>> ns;
            std::vector<double> nf;
            for (size_t i : idx) {
                ns.push_back(simplex[i]);
                nf.push_back(fv[i]);
            }
            simplex = ns;
            fv = nf;
            double spread = 0;
            for (size_t i = 0; i < nz; ++i)
                spread = std::max(spread, std::fabs(simplex.front()[i] - simplex.back()[i]));
            if (spread < 1e-14 && std::isfinite(fv.front())) break;
            std::vector<double> centroid(nz, 0.0);
            for (size_t s = 0; s + 1 < simplex.size(); ++s)
                for (size_t i = 0; i < nz; ++i) centroid[i] += simplex[s][i] / static_cast<double>(nz);
            auto combo = [&](double c) {
                std::vector<double> v(nz);
                for (size_t i = 0; i < nz; ++i)
                    v[i] = centroid[i] + c * (centroid[i] - simplex.back()[i]);
                return v;
            };
            std::vector<double> refl = combo(1.0);
            double f_refl = objective(at_z(refl));
            if (f_refl > fv.front()) {
                std::vector<double> exp_v = combo(2.0);
                double f_exp = objective(at_z(exp_v));
                if (f_exp > f_refl) {
                    simplex.back() = exp_v;
                    fv.back() = f_exp;
                } else {
                    simplex.back() = refl;
                    fv.back() = f_refl;
                }
            } else if (f_refl > fv[fv.size() - 2]) {
                simplex.back() = refl;
                fv.back() = f_refl;
            } else {
                std::vector<double> con = combo(-0.5);
                double f_con = objective(at_z(con));
                if (f_con > fv.back()) {
                    simplex.back() = con;
                    fv.back() = f_con;
                } else {
                    for (size_t s = 1; s < simplex.size(); ++s) {
                        for (size_t i = 0; i < nz; ++i)
                            simplex[s][i] = 0.5 * (simplex[s][i] + simplex.front()[i]);
                        fv[s] = objective(at_z(simplex[s]));
                    }
                }
            }
        }
        best = at_z(simplex.front());
    }

    double mu_best = max_radius_sq(best);
    if (!std::isfinite(mu_best) || mu_best <= 0 ||
        !std::isfinite(objective(best)))
        return false;
    std::array<double, 4> candidate = best;
    for (auto& v : candidate) v /= mu_best;  // scale out to max r^2 = 1
    double moved = 0;
    for (int k = 0; k < 4; ++k)
        moved = std::max(moved, std::fabs(candidate[static_cast<size_t>(k)] - p[static_cast<size_t>(k)]));
    p = candidate;
    return moved > 1e-13;
}

// ---------------------------------------------------------------------------
// rationalization

namespace {

// Best rational approximation with denominator <= bound (continued
// fractions over the exact binary value of x).
Rational best_rational(double x, const Integer& bound) {
    Rational exact(x);  // exact binary expansion
    if (exact.get_den() <= bound) return exact;
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    Rational rest = exact;
    for (int it = 0; it < 128; ++it) {
        Integer a = floor_rat(rest);
        Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > bound) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        Rational frac = rest - Rational(a);
        if (frac == 0) break;
        rest = 1 / frac;
    }
    return Rational(p1, q1);
}

}  // namespace

PQF rationalize(const CoveringOptimizer& opt, const OptimizeResult& res,
                const Integer& denominator_bound) {
    RatVec p_float(4);
    for (int k = 0; k < 4; ++k) p_float[static_cast<size_t>(k)] = Rational(res.params[static_cast<size_t>(k)]);

    std::set<size_t> active(res.active_regulators.begin(), res.active_regulators.end());
    const RatMat& coeffs = opt.regulator_coeffs();
    for (int round = 0; round < 6; ++round) {
        // Coordinates are rounded inside the active face: with K an exact
        // kernel basis of the active rows, the float parameters are
        // projected to z solving (K K^t) z = K p, each z_i is rounded by
        // continued fractions, and p* = sum z_i k_i lies on the face
        // exactly with moderate denominators.
        RatMat a_rows;
        for (size_t j : active) a_rows.push_back(coeffs[j]);
        RatMat kernel = nullspace(a_rows, 4);
        if (kernel.empty())
            throw RationalizeError("active regulators leave no feasible direction", SIZE_MAX);
        RatVec proj(4, Rational(0));
        {
            const size_t m = kernel.size();
            RatMat gram(m, RatVec(m));
            RatVec rhs(m);
            for (size_t i = 0; i < m; ++i) {
                for (size_t j = 0; j < m; ++j) gram[i][j] = dot(kernel[i], kernel[j]);
                rhs[i] = dot(kernel[i], p_float);
            }
            RatVec z = solve(gram, rhs);
            for (size_t i = 0; i < m; ++i) {
                Rational zi = best_rational(z[i].get_d(), denominator_bound);
                for (int k = 0; k < 4; ++k)
                    proj[static_cast<size_t>(k)] += zi * kernel[i][static_cast<size_t>(k)];
            }
        }
        // exact feasibility
        size_t violated = SIZE_MAX;
        for (size_t j = 0; j < coeffs.size(); ++j) {
            if (dot(coeffs[j], proj) < 0) {
                violated = j;
                break;
            }
        }
        if (violated == SIZE_MAX) {
            InvariantSubspace space;
            SymMatrix q = space.embed(proj);
            if (!is_positive_definite(q))
                throw RationalizeError("rationalized form is not positive definite", SIZE_MAX);
            return PQF::trusted(std::move(q));
        }
        if (active.count(violated))
            throw RationalizeError("projection cannot restore regulator feasibility", violated);
        active.insert(violated);
    }
    throw RationalizeError("rationalization did not converge to a feasible point", SIZE_MAX);
}

// ---------------------------------------------------------------------------
// certification

Certificate certify(const E8Model& model, const PeriodicTriangulation& t,
                    const RegulatorSet& regs, const SymMatrix& q, const std::string& threshold,
                    int threads) {
    Certificate cert;
    cert.q = q;
    cert.threshold = threshold;
    cert.regulator_forms = static_cast<long>(regs.regulators.size());

    if (q.dim() != 8 || !is_positive_definite(q))
        throw CertifyRejection("positivity", -1, "form is not an 8-dimensional PQF");

    // stage (i): the triangulation really is Delone somewhere
    try {
        cert.interior_witness = interior_point(regs);
    } catch (const InfeasibleTriangulation& e) {
        throw CertifyRejection("interior-point", -1, e.what());
    }

    // stage (ii): q lies in the closure of the secondary cone, so the
    // triangulation refines Del(q)
    for (size_t j = 0; j < regs.regulators.size(); ++j) {
        Rational v = regs.regulators[j].evaluate(q);
        if (v < 0)
            throw CertifyRejection("regulators", static_cast<long>(j),
                                   "regulator is negative at the candidate form");
        if (v == 0) cert.zero_regulators += 1;
    }

    // stage (iii): exact squared circumradii of all representatives
    const std::vector<Simplex> reps = representative_simplices(model, t);
    cert.per_simplex_radius_sq.assign(reps.size(), Rational(0));
    PQF pq = PQF::trusted(q);
    auto worker = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i)
            cert.per_simplex_radius_sq[i] = circumradius_sq_determinant(reps[i], pq);
    };
    if (threads <= 1) {
        worker(0, reps.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (reps.size() + static_cast<size_t>(threads) - 1) / static_cast<size_t>(threads);
        for (int th = 0; th < threads; ++th) {
            size_t b = static_cast<size_t>(th) * chunk;
            size_t e = std::min(reps.size(), b + chunk);
            if (b < e) pool.emplace_back(worker, b, e);
        }
        for (auto& th : pool) th.join();
    }
    cert.mu = cert.per_simplex_radius_sq.front();
    for (const auto& r : cert.per_simplex_radius_sq)
        if (r > cert.mu) cert.mu = r;
    cert.det = determinant(q);
    cert.theta_sq_ratio = rational_pow(cert.mu, 8) / cert.det;
    cert.verdict = compare_density_to_decimal(cert.theta_sq_ratio, threshold, 8);
    return cert;
}

// ---------------------------------------------------------------------------
// reference data diagnostic

ReferenceDiagnostic reference_form_diagnostic() {
    auto build = [](std::initializer_list<std::initializer_list<const char*>> rows) {
        SymMatrix m(8);
        int i = 0;
        for (const auto& row : rows) {
            int j = 0;
            for (const char* e : row) {
                if (j >= i) m.set(i, j, rational_from_string(e));
                ++j;
            }
            ++i;
        }
        return m;
    };
    SymMatrix q1 = build({{"1", "0", "0", "0", "0", "0", "0", "2"},
                          {"0", "4/7", "-2/3", "0", "0", "0", "0", "0"},
                          {"0", "-2/3", "4/3", "-2/3", "0", "0", "0", "0"},
                          {"0", "0", "-2/3", "4/3", "-2/3", "0", "0", "0"},
                          {"0", "0", "0", "-2/3", "4/3", "-2/3", "0", "0"},
                          {"0", "0", "0", "0", "-2/3", "4/3", "-2/3", "0"},
                          {"0", "0", "0", "0", "0", "-2/3", "4/3", "0"},
                          {"2", "0", "0", "0", "0", "0", "0", "4"}});
    SymMatrix q2 = build({{"0", "1", "0", "0", "0", "0", "0", "7/2"},
                          {"1", "0", "-2/3", "0", "0", "0", "0", "0"},
                          {"0", "-2/3", "4/3", "-2/3", "0", "0", "0", "0"},
                          {"0", "0", "-2/3", "4/3", "-2/3", "0", "0", "0"},
                          {"0", "0", "0", "-2/3", "4/3", "-2/3", "0", "0"},
                          {"0", "0", "0", "0", "-2/3", "4/3", "-2/3", "0"},
                          {"0", "0", "0", "0", "0", "-2/3", "4/3", "0"},
                          {"7/2", "0", "0", "0", "0", "0", "0", "7"}});
    ReferenceDiagnostic d;
    d.q_tilde = q1 * Rational(Integer("34229189769")) - q2 * Rational(Integer("17121746137"));
    d.det = determinant(d.q_tilde);
    d.trace = d.q_tilde.trace();
    d.positive_definite = is_positive_definite(d.q_tilde);
    return d;
}

}  // namespace covlat
