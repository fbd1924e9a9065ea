#include "covlat/e8.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "covlat/lp.hpp"

namespace covlat {

namespace {

std::string key_of(const RatVec& v) {
    std::ostringstream os;
    for (const auto& x : v) os << x.get_str() << ',';
    return os.str();
}

RatVec unit(int i, const Rational& c = 1) {
    RatVec v(8, Rational(0));
    v[i] = c;
    return v;
}

// General square inverse through repeated exact solves (small, one-off).
RatMat invert_rows(const RatMat& rows) {
    const size_t n = rows.size();
    RatMat cols(n);
    for (size_t j = 0; j < n; ++j) {
        RatVec e(n, Rational(0));
        e[j] = 1;
        cols[j] = solve(rows, e);
    }
    RatMat inv(n, RatVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = cols[j][i];
    return inv;
}

}  // namespace

// ---------------------------------------------------------------------------
// model

E8Model::E8Model() {
    basis_ = {unit(0, 2)};
    for (int i = 0; i < 6; ++i) {
        RatVec v(8, Rational(0));
        v[i] = -1;
        v[i + 1] = 1;
        basis_.push_back(v);
    }
    basis_.push_back(RatVec(8, Rational(1, 2)));

    SymMatrix g(8);
    for (int i = 0; i < 8; ++i)
        for (int j = i; j < 8; ++j) g.set(i, j, dot(basis_[i], basis_[j]));
    gram_ = PQF(std::move(g));
    if (determinant(gram_.matrix()) != 1) throw std::logic_error("E8 basis: determinant");
    if (homogeneous_minimum(gram_) != 2) throw std::logic_error("E8 basis: minimum");

    // basis_inv_ = B^-1 so that to_basis(x) = x . B^-1 (rows are generators).
    RatMat bt(8, RatVec(8));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) bt[i][j] = basis_[j][i];
    RatMat bt_inv = invert_rows(bt);
    basis_inv_.assign(8, RatVec(8));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) basis_inv_[i][j] = bt_inv[j][i];
}

const E8Model& E8Model::instance() {
    static const E8Model model;
    return model;
}

bool E8Model::contains(const RatVec& x) const {
    if (x.size() != 8) return false;
    bool all_int = true, all_half = true;
    Rational sum = 0;
    for (const auto& e : x) {
        sum += e;
        if (e.get_den() == 1) all_half = false;
        else if (e.get_den() == 2) all_int = false;
        else return false;
    }
    if (!all_int && !all_half) return false;
    if (sum.get_den() != 1) return false;
    return mpz_even_p(sum.get_num_mpz_t());
}

RatVec E8Model::to_basis(const RatVec& x) const {
    RatVec c(8, Rational(0));
    for (int j = 0; j < 8; ++j)
        for (int i = 0; i < 8; ++i) c[j] += x[i] * basis_inv_[i][j];
    return c;
}

RatVec E8Model::from_basis(const RatVec& c) const {
    RatVec x(8, Rational(0));
    for (int i = 0; i < 8; ++i) {
        if (c[i] == 0) continue;
        for (int j = 0; j < 8; ++j) x[j] += c[i] * basis_[i][j];
    }
    return x;
}

const std::vector<RatVec>& E8Model::shell_std(long norm) const {
    auto it = shells_.find(norm);
    if (it != shells_.end()) return it->second;
    Shell shell = enumerate_shell(gram_, Rational(norm));
    std::vector<RatVec> std_vecs;
    std_vecs.reserve(shell.vectors.size());
    for (const auto& c : shell.vectors) {
        RatVec coeffs(c.begin(), c.end());
        std_vecs.push_back(from_basis(coeffs));
    }
    std::sort(std_vecs.begin(), std_vecs.end(), lex_less);
    return shells_.emplace(norm, std::move(std_vecs)).first->second;
}

// ---------------------------------------------------------------------------
// diagonal classes

std::vector<DiagonalClass> diagonal_classes(const E8Model& model) {
    const auto& shell4 = model.shell_std(4);
    std::map<std::string, std::vector<RatVec>> groups;
    for (const auto& w : shell4) {
        RatVec c = model.to_basis(w);
        std::ostringstream os;
        for (const auto& e : c) {
            long v = e.get_num().get_si() % 2;
            os << (v < 0 ? v + 2 : v) << ',';
        }
        groups[os.str()].push_back(w);
    }
    std::vector<DiagonalClass> classes;
    for (auto& [key, members] : groups) {
        (void)key;
        DiagonalClass cls;
        std::sort(members.begin(), members.end(), lex_less);
        cls.representative = members.back();
        cls.members = std::move(members);
        bool half = cls.representative[0].get_den() == 2;
        if (half) {
            cls.type = DiagonalClassType::halfinteger;
        } else {
            int nonzero = 0;
            for (const auto& e : cls.representative)
                if (e != 0) ++nonzero;
            cls.type = nonzero == 1 ? DiagonalClassType::axis : DiagonalClassType::quadruple;
        }
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [](const DiagonalClass& a, const DiagonalClass& b) {
        return lex_less(a.representative, b.representative);
    });
    return classes;
}

// ---------------------------------------------------------------------------
// cells

CrossPolytopeE8 cross_polytope(const E8Model& model, const RatVec& w) {
    const SymMatrix id = SymMatrix::identity(8);
    if (!model.contains(w) || evaluate(id, w) != 4)
        throw std::invalid_argument("cross_polytope: not a norm-4 lattice vector");
    std::vector<std::pair<RatVec, RatVec>> pairs;  // (lex-larger rep, partner)
    std::set<std::string> seen;
    for (const auto& v : model.shell_std(2)) {
        RatVec u = sub(w, v);
        if (evaluate(id, u) != 2) continue;
        RatVec rep = lex_less(v, u) ? u : v;
        std::string k = key_of(rep);
        if (seen.insert(k).second) pairs.emplace_back(rep, sub(w, rep));
    }
    if (pairs.size() != 7) throw std::logic_error("cross_polytope: expected 7 vertex pairs");
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    CrossPolytopeE8 p;
    p.vertices.assign(16, RatVec(8, Rational(0)));
    p.vertices[8] = w;
    for (int j = 0; j < 7; ++j) {
        p.vertices[j + 1] = pairs[j].first;
        p.vertices[j + 9] = pairs[j].second;
    }
    p.center = scale(w, Rational(1, 2));
    return p;
}

std::vector<DeloneSimplexE8> simplices_of_subdivision(const E8Model& model) {
    const SymMatrix id = SymMatrix::identity(8);
    const auto& shell8 = model.shell_std(8);

    auto residue_key = [&](const RatVec& std_vec, bool negated) {
        RatVec c = model.to_basis(std_vec);
        long key = 0;
        for (int i = 0; i < 8; ++i) {
            long v = c[i].get_num().get_si();
            if (negated) v = -v;
            long r = ((v % 3) + 3) % 3;
            key = key * 3 + r;
        }
        return key;
    };

    std::map<long, std::vector<const RatVec*>> buckets;
    for (const auto& y : shell8) buckets[residue_key(y, false)].push_back(&y);

    std::vector<DeloneSimplexE8> out;
    out.reserve(17280);
    for (const auto& v : shell8) {
        RatVec half = scale(v, Rational(1, 2));
        if (model.contains(half)) continue;  // doubled minimal vector
        DeloneSimplexE8 s;
        s.center = scale(v, Rational(1, 3));
        auto it = buckets.find(residue_key(v, true));
        if (it == buckets.end()) throw std::logic_error("simplex: empty residue class");
        for (const RatVec* y : it->second)
            s.vertices.push_back(scale(add(*y, v), Rational(1, 3)));
        if (s.vertices.size() != 9) throw std::logic_error("simplex: expected 9 vertices");
        std::sort(s.vertices.begin(), s.vertices.end(), lex_less);
        out.push_back(std::move(s));
    }
    if (out.size() != 17280) throw std::logic_error("expected 17280 origin-incident simplices");
    (void)id;
    return out;
}

std::vector<DeloneSimplexE8> simplex_representatives(const E8Model& model) {
    std::map<std::string, DeloneSimplexE8> reps;
    for (auto& s : simplices_of_subdivision(model)) {
        const RatVec& anchor = s.vertices.front();  // vertices sorted, front is lex-min
        DeloneSimplexE8 t;
        for (const auto& v : s.vertices) t.vertices.push_back(sub(v, anchor));
        t.center = sub(s.center, anchor);
        std::ostringstream os;
        for (const auto& v : t.vertices) os << key_of(v) << ';';
        reps.emplace(os.str(), std::move(t));
    }
    std::vector<DeloneSimplexE8> out;
    out.reserve(reps.size());
    for (auto& [k, s] : reps) {
        (void)k;
        out.push_back(std::move(s));
    }
    return out;
}

bool adjacent_cells(const E8Model& model, const E8Cell& a, const E8Cell& b) {
    (void)model;
    const SymMatrix id = SymMatrix::identity(8);
    auto check = [&](const E8Cell& c) {
        Rational n = evaluate(id, c.center);
        if (c.is_simplex ? n != Rational(8, 9) : n != 1)
            throw std::invalid_argument("adjacent_cells: cell does not contain the origin");
    };
    check(a);
    check(b);
    if (a.is_simplex && b.is_simplex) return false;
    Rational ip = dot(a.center, b.center);
    if (a.is_simplex != b.is_simplex) return ip == Rational(5, 6);
    return ip == Rational(3, 4);
}

// ---------------------------------------------------------------------------
// G-orbits

namespace {

const std::vector<std::pair<int, RatVec>>& orbit_catalogue() {
    static const std::vector<std::pair<int, RatVec>> cat = [] {
        auto h = [](std::initializer_list<long> twice) {
            RatVec v;
            for (long t : twice) v.emplace_back(Rational(t, 2));
            return v;
        };
        std::vector<std::pair<int, RatVec>> c;
        c.emplace_back(1, rat_vec({2, 0, 0, 0, 0, 0, 0, 0}));
        c.emplace_back(2, rat_vec({0, 2, 0, 0, 0, 0, 0, 0}));
        c.emplace_back(3, rat_vec({1, 1, 1, 1, 0, 0, 0, 0}));
        c.emplace_back(4, rat_vec({1, -1, 1, 1, 0, 0, 0, 0}));
        c.emplace_back(5, rat_vec({1, -1, -1, 1, 0, 0, 0, 0}));
        c.emplace_back(6, rat_vec({1, -1, -1, -1, 0, 0, 0, 0}));
        c.emplace_back(7, rat_vec({0, 1, 1, 1, 1, 0, 0, 0}));
        c.emplace_back(8, rat_vec({0, -1, 1, 1, 1, 0, 0, 0}));
        c.emplace_back(9, rat_vec({0, -1, -1, 1, 1, 0, 0, 0}));
        c.emplace_back(10, h({3, -1, 1, 1, 1, 1, 1, 1}));
        c.emplace_back(11, h({3, -1, -1, -1, 1, 1, 1, 1}));
        c.emplace_back(12, h({3, -1, -1, -1, -1, -1, 1, 1}));
        c.emplace_back(13, h({3, -1, -1, -1, -1, -1, -1, -1}));
        c.emplace_back(14, h({1, 3, -1, 1, 1, 1, 1, 1}));
        c.emplace_back(15, h({1, 3, -1, -1, -1, 1, 1, 1}));
        c.emplace_back(16, h({1, 3, -1, -1, -1, -1, -1, 1}));
        c.emplace_back(17, h({1, -3, 1, 1, 1, 1, 1, 1}));
        c.emplace_back(18, h({1, -3, -1, -1, 1, 1, 1, 1}));
        c.emplace_back(19, h({1, -3, -1, -1, -1, -1, 1, 1}));
        c.emplace_back(20, h({1, -3, -1, -1, -1, -1, -1, -1}));
        return c;
    }();
    return cat;
}

}  // namespace

std::vector<GOrbit> g_orbits(const E8Model& model) {
    const auto& shell4 = model.shell_std(4);
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < shell4.size(); ++i) index[key_of(shell4[i])] = i;

    std::vector<int> orbit_of(shell4.size(), -1);
    std::vector<std::vector<size_t>> orbits;
    for (size_t start = 0; start < shell4.size(); ++start) {
        if (orbit_of[start] >= 0) continue;
        int oid = static_cast<int>(orbits.size());
        std::vector<size_t> queue{start}, members{start};
        orbit_of[start] = oid;
        while (!queue.empty()) {
            size_t cur = queue.back();
            queue.pop_back();
            std::vector<RatVec> images;
            images.push_back(negate(shell4[cur]));
            for (int i = 1; i < 7; ++i) {
                RatVec im = shell4[cur];
                std::swap(im[i], im[i + 1]);
                images.push_back(std::move(im));
            }
            for (const auto& im : images) {
                size_t j = index.at(key_of(im));
                if (orbit_of[j] < 0) {
                    orbit_of[j] = oid;
                    queue.push_back(j);
                    members.push_back(j);
                }
            }
        }
        orbits.push_back(std::move(members));
    }

    std::vector<GOrbit> out;
    for (const auto& [id, rep] : orbit_catalogue()) {
        auto it = index.find(key_of(rep));
        if (it == index.end()) throw std::logic_error("orbit representative not in shell");
        const auto& members = orbits[static_cast<size_t>(orbit_of[it->second])];
        GOrbit o;
        o.id = id;
        o.representative = rep;
        o.pair_count = static_cast<long>(members.size() / 2);
        for (size_t j : members) o.members.push_back(shell4[j]);
        std::sort(o.members.begin(), o.members.end(), lex_less);
        out.push_back(std::move(o));
    }
    if (out.size() != orbits.size())
        throw std::logic_error("orbit catalogue does not exhaust the shell");
    return out;
}

// ---------------------------------------------------------------------------
// candidate triangulations

std::vector<PeriodicTriangulation> candidate_triangulations(const E8Model& model) {
    const auto classes = diagonal_classes(model);
    const auto orbits = g_orbits(model);

    std::map<std::string, int> class_of;
    for (size_t c = 0; c < classes.size(); ++c)
        for (const auto& m : classes[c].members) class_of[key_of(m)] = static_cast<int>(c);

    // pairs_in[i][c]: antipodal pairs of orbit i landing in class c
    std::vector<std::vector<int>> pairs_in(orbits.size(), std::vector<int>(classes.size(), 0));
    for (size_t i = 0; i < orbits.size(); ++i)
        for (const auto& m : orbits[i].members) pairs_in[i][class_of.at(key_of(m))] += 1;
    for (auto& row : pairs_in)
        for (auto& v : row) v /= 2;

    std::vector<size_t> eligible;
    for (size_t i = 0; i < orbits.size(); ++i) {
        bool ok = true;
        for (int v : pairs_in[i])
            if (v > 1) ok = false;
        if (ok) eligible.push_back(i);
    }

    // Exact cover: every class met by exactly one selected pair.
    std::vector<PeriodicTriangulation> found;
    const size_t n = eligible.size();
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        std::vector<int> cover(classes.size(), 0);
        for (size_t b = 0; b < n; ++b)
            if (mask & (size_t{1} << b))
                for (size_t c = 0; c < classes.size(); ++c) cover[c] += pairs_in[eligible[b]][c];
        bool exact = true;
        for (int v : cover)
            if (v != 1) exact = false;
        if (!exact) continue;

        PeriodicTriangulation t;
        for (size_t b = 0; b < n; ++b)
            if (mask & (size_t{1} << b)) t.orbit_selection.push_back(orbits[eligible[b]].id);
        std::sort(t.orbit_selection.begin(), t.orbit_selection.end());
        t.diagonal_of_class.assign(classes.size(), RatVec());
        for (size_t b = 0; b < n; ++b) {
            if (!(mask & (size_t{1} << b))) continue;
            for (const auto& m : orbits[eligible[b]].members) {
                int c = class_of.at(key_of(m));
                if (t.diagonal_of_class[c].empty() || lex_less(t.diagonal_of_class[c], m))
                    t.diagonal_of_class[c] = m;
            }
        }
        found.push_back(std::move(t));
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return a.orbit_selection < b.orbit_selection;
    });
    return found;
}

// ---------------------------------------------------------------------------
// feasibility in the invariant parameter space

namespace {

// Q[v] as a linear form in the parameters (alpha, beta, gamma, delta) of a
// G-invariant symmetric matrix.
RatVec invariant_value_coeffs(const RatVec& v) {
    Rational s = 0, t = 0;
    for (size_t i = 1; i < v.size(); ++i) {
        s += v[i];
        t += v[i] * v[i];
    }
    return {v[0] * v[0], 2 * v[0] * s, t, s * s - t};
}

}  // namespace

bool delone_feasible(const E8Model& model, const PeriodicTriangulation& t) {
    const auto classes = diagonal_classes(model);
    std::set<std::string> seen;
    RatMat constraints;  // a . p >= margin
    for (size_t c = 0; c < classes.size(); ++c) {
        const RatVec& w = t.diagonal_of_class[c];
        RatVec aw = invariant_value_coeffs(w);
        std::set<std::string> pair_done{key_of(w), key_of(negate(w))};
        for (const auto& d : classes[c].members) {
            if (!pair_done.insert(key_of(d)).second) continue;
            pair_done.insert(key_of(negate(d)));
            RatVec a = sub(invariant_value_coeffs(d), aw);  // Q[d] - Q[w] > 0
            if (seen.insert(key_of(a)).second) constraints.push_back(std::move(a));
        }
    }
    // max margin m s.t. a.p >= m on the box |p_k| <= 1; feasible iff m > 0.
    RatMat lp_a;
    RatVec lp_b, lp_c(5, Rational(0));
    lp_c[4] = 1;
    for (const auto& a : constraints) {
        RatVec row(5, Rational(0));
        for (int k = 0; k < 4; ++k) row[k] = -a[k];
        row[4] = 1;
        lp_a.push_back(row);
        lp_b.push_back(0);
    }
    for (int k = 0; k < 4; ++k) {
        RatVec hi(5, Rational(0)), lo(5, Rational(0));
        hi[k] = 1;
        lo[k] = -1;
        lp_a.push_back(hi);
        lp_b.push_back(1);
        lp_a.push_back(lo);
        lp_b.push_back(1);
    }
    LPResult r = lp_maximize(lp_a, lp_b, lp_c);
    return r.status == LPStatus::optimal && r.value > 0;
}

// ---------------------------------------------------------------------------
// splitting

std::vector<Simplex> split_cross_polytope(const CrossPolytopeE8& p, const RatVec& diagonal) {
    int pair_index = -1;
    bool flipped = false;
    for (int j = 0; j < 8; ++j) {
        RatVec d = sub(p.vertices[j], p.vertices[j + 8]);
        if (d == diagonal) {
            pair_index = j;
            flipped = true;  // diagonal points from v_{j+8} toward v_j
            break;
        }
        if (negate(d) == diagonal) {
            pair_index = j;
            break;
        }
    }
    if (pair_index < 0) throw std::invalid_argument("split: not a diagonal of this cross polytope");
    const RatVec& tail = flipped ? p.vertices[pair_index + 8] : p.vertices[pair_index];

    std::vector<std::pair<RatVec, RatVec>> pairs;  // translated non-split pairs
    for (int j = 0; j < 8; ++j) {
        if (j == pair_index) continue;
        pairs.emplace_back(sub(p.vertices[j], tail), sub(p.vertices[j + 8], tail));
    }
    std::vector<Simplex> out;
    out.reserve(128);
    RatVec origin(8, Rational(0));
    for (int mask = 0; mask < 128; ++mask) {
        Simplex s;
        s.vertices.push_back(origin);
        s.vertices.push_back(diagonal);
        for (int j = 0; j < 7; ++j)
            s.vertices.push_back((mask >> j) & 1 ? pairs[j].second : pairs[j].first);
        out.push_back(std::move(s));
    }
    return out;
}

// ---------------------------------------------------------------------------
// regulators

Rational Regulator::evaluate(const SymMatrix& q) const {
    Rational s = 0;
    for (const auto& [coeff, point] : terms) s += coeff * covlat::evaluate(q, point);
    return s;
}

SymMatrix Regulator::form_matrix(int dim) const {
    SymMatrix m(dim);
    for (const auto& [coeff, point] : terms)
        for (int i = 0; i < dim; ++i) {
            if (point[i] == 0) continue;
            for (int j = i; j < dim; ++j) m.add_at(i, j, coeff * point[i] * point[j]);
        }
    return m;
}

Regulator regulator_from_pair(const std::vector<RatVec>& l, const std::vector<RatVec>& lp,
                              RegulatorKind kind) {
    std::vector<RatVec> points;
    std::map<std::string, size_t> idx;
    auto add_point = [&](const RatVec& v) {
        auto [it, fresh] = idx.emplace(key_of(v), points.size());
        if (fresh) points.push_back(v);
        return it->second;
    };
    for (const auto& v : l) add_point(v);
    size_t exclusive_l = SIZE_MAX;
    {
        std::set<std::string> in_lp;
        for (const auto& v : lp) in_lp.insert(key_of(v));
        for (const auto& v : l)
            if (!in_lp.count(key_of(v))) exclusive_l = idx.at(key_of(v));
    }
    for (const auto& v : lp) add_point(v);
    if (points.size() != l.size() + 1 || exclusive_l == SIZE_MAX)
        throw std::invalid_argument("regulator: simplices do not share a facet");

    // alpha solves: sum alpha_i v_i = 0, sum alpha_i = 0.
    const size_t np = points.size();
    RatMat rows;
    for (size_t coord = 0; coord < points[0].size(); ++coord) {
        RatVec row(np);
        for (size_t i = 0; i < np; ++i) row[i] = points[i][coord];
        rows.push_back(std::move(row));
    }
    rows.push_back(RatVec(np, Rational(1)));
    RatMat kernel = nullspace(rows, static_cast<int>(np));
    if (kernel.size() != 1) throw std::invalid_argument("regulator: dependence not unique");
    RatVec alpha = kernel[0];
    if (alpha[exclusive_l] == 0) throw std::logic_error("regulator: exclusive coefficient vanished");
    Rational norm = 1 / alpha[exclusive_l];
    for (auto& a : alpha) a *= norm;

    Regulator reg;
    reg.kind = kind;
    RatVec anchor = points[0];
    for (const auto& pt : points)
        if (lex_less(pt, anchor)) anchor = pt;
    for (size_t i = 0; i < np; ++i) {
        if (alpha[i] == 0) continue;
        reg.terms.emplace_back(alpha[i], sub(points[i], anchor));
    }
    std::sort(reg.terms.begin(), reg.terms.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return lex_less(a.second, b.second);
        return a.first < b.first;
    });
    return reg;
}

namespace {

std::string regulator_key(const Regulator& r) {
    std::ostringstream os;
    for (const auto& [c, p] : r.terms) os << c.get_str() << ':' << key_of(p) << ';';
    return os.str();
}

std::string simplex_pair_key(std::vector<RatVec> a, std::vector<RatVec> b) {
    std::sort(a.begin(), a.end(), lex_less);
    std::sort(b.begin(), b.end(), lex_less);
    RatVec anchor = lex_less(a.front(), b.front()) ? a.front() : b.front();
    auto serialize = [&](const std::vector<RatVec>& vs) {
        std::ostringstream os;
        for (const auto& v : vs) os << key_of(sub(v, anchor)) << ';';
        return os.str();
    };
    std::string ka = serialize(a), kb = serialize(b);
    if (kb < ka) std::swap(ka, kb);
    return ka + "|" + kb;
}

}  // namespace

RegulatorSet regulators(const E8Model& model, const PeriodicTriangulation& t) {
    const auto classes = diagonal_classes(model);
    RegulatorSet out;
    std::set<std::string> forms;
    std::set<std::string> type2_pairs;

    auto class_residue = [&](const RatVec& w) {
        RatVec coeffs = model.to_basis(w);
        std::string k;
        for (const auto& e : coeffs) {
            long v = e.get_num().get_si() % 2;
            k += std::to_string(v < 0 ? v + 2 : v) + ",";
        }
        return k;
    };
    std::map<std::string, int> class_index;
    for (size_t ci = 0; ci < classes.size(); ++ci)
        class_index[class_residue(classes[ci].representative)] = static_cast<int>(ci);

    auto absorb = [&](Regulator&& r) {
        if (forms.insert(regulator_key(r)).second) out.regulators.push_back(std::move(r));
    };

    for (size_t c = 0; c < classes.size(); ++c) {
        const RatVec& w = t.diagonal_of_class[c];
        CrossPolytopeE8 p = cross_polytope(model, w);

        // type 3: the 7 interior walls of the split along the chosen diagonal
        std::vector<RatVec> base;
        base.push_back(p.vertices[0]);
        base.push_back(p.vertices[8]);
        for (int j = 1; j < 8; ++j) base.push_back(p.vertices[j]);
        for (int k = 1; k < 8; ++k) {
            std::vector<RatVec> other = base;
            other[static_cast<size_t>(1 + k)] = p.vertices[k + 8];
            absorb(regulator_from_pair(base, other, RegulatorKind::type3));
            ++out.type3_instances;
        }

        // walk all 256 outer facets
        int simplex_facets = 0, cross_facets = 0;
        for (int mask = 0; mask < 256; ++mask) {
            std::vector<RatVec> facet;
            for (int j = 0; j < 8; ++j)
                facet.push_back((mask >> j) & 1 ? p.vertices[j + 8] : p.vertices[j]);
            RatVec s(8, Rational(0));
            for (const auto& v : facet) s = add(s, v);
            // the split piece on our side: facet + the missing chosen-diagonal endpoint
            std::vector<RatVec> piece = facet;
            piece.push_back((mask & 1) ? p.vertices[0] : p.vertices[8]);

            RatVec apex = sub(scale(s, Rational(1, 2)), scale(p.center, Rational(3)));
            if (model.contains(apex)) {
                ++simplex_facets;
                std::vector<RatVec> neighbor = facet;
                neighbor.push_back(apex);
                absorb(regulator_from_pair(piece, neighbor, RegulatorKind::type1));
                ++out.type1_instances;
            } else {
                ++cross_facets;
                RatVec c2 = sub(scale(s, Rational(1, 4)), p.center);
                RatVec d_sample = sub(scale(facet[0], Rational(2)), scale(c2, Rational(2)));
                auto it = class_index.find(class_residue(d_sample));
                if (it == class_index.end())
                    throw std::logic_error("regulators: neighbor class not found");
                const RatVec& d2 = t.diagonal_of_class[it->second];
                RatVec a_end = add(c2, scale(d2, Rational(1, 2)));
                RatVec b_end = sub(c2, scale(d2, Rational(1, 2)));
                std::set<std::string> facet_keys;
                for (const auto& v : facet) facet_keys.insert(key_of(v));
                const RatVec& far_end = facet_keys.count(key_of(a_end)) ? b_end : a_end;
                std::vector<RatVec> neighbor = facet;
                neighbor.push_back(far_end);
                if (type2_pairs.insert(simplex_pair_key(piece, neighbor)).second)
                    ++out.type2_instances;
                absorb(regulator_from_pair(piece, neighbor, RegulatorKind::type2));
            }
        }
        if (simplex_facets != 128 || cross_facets != 128)
            throw std::logic_error("regulators: facet split is not 128/128");
    }
    return out;
}

std::vector<Simplex> representative_simplices(const E8Model& model,
                                              const PeriodicTriangulation& t) {
    std::vector<Simplex> out;
    out.reserve(19200);
    for (const auto& s : simplex_representatives(model)) out.push_back(Simplex{s.vertices});
    const auto classes = diagonal_classes(model);
    for (size_t c = 0; c < classes.size(); ++c) {
        CrossPolytopeE8 p = cross_polytope(model, t.diagonal_of_class[c]);
        for (Simplex piece : split_cross_polytope(p, t.diagonal_of_class[c])) {
            RatVec anchor = piece.vertices.front();
            for (const auto& v : piece.vertices)
                if (lex_less(v, anchor)) anchor = v;
            for (auto& v : piece.vertices) v = sub(v, anchor);
            std::sort(piece.vertices.begin(), piece.vertices.end(), lex_less);
            out.push_back(std::move(piece));
        }
    }
    if (out.size() != 19200) throw std::logic_error("expected 19200 representative simplices");
    return out;
}

Rational e8_inhomogeneous_minimum(const E8Model& model) {
    const SymMatrix id = SymMatrix::identity(8);
    const PQF form = PQF::trusted(id);
    Rational mu = 0;
    for (const auto& s : simplex_representatives(model)) {
        Rational r2 = circumradius_sq_determinant(Simplex{s.vertices}, form);
        if (r2 > mu) mu = r2;
    }
    for (const auto& cls : diagonal_classes(model)) {
        CrossPolytopeE8 p = cross_polytope(model, cls.representative);
        Rational r2 = evaluate(id, sub(p.vertices[0], p.center));
        for (const auto& v : p.vertices)
            if (evaluate(id, sub(v, p.center)) != r2)
                throw std::logic_error("cross polytope vertices are not equidistant");
        if (r2 > mu) mu = r2;
    }
    return mu;
}

// ---------------------------------------------------------------------------
// H.A.H

RatMat hah_transform() {
    RatMat h(8, RatVec(8, Rational(0)));
    const long h4[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
    for (int blk = 0; blk < 2; ++blk)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) h[blk * 4 + i][blk * 4 + j] = Rational(h4[i][j], 2);
    RatMat a(8, RatVec(8, Rational(0)));
    a[0][4] = -1;
    a[4][0] = -1;
    for (int i : {1, 2, 3, 5, 6, 7}) a[i][i] = 1;
    auto matmul = [](const RatMat& x, const RatMat& y) {
        RatMat z(8, RatVec(8, Rational(0)));
        for (int i = 0; i < 8; ++i)
            for (int k = 0; k < 8; ++k) {
                if (x[i][k] == 0) continue;
                for (int j = 0; j < 8; ++j) z[i][j] += x[i][k] * y[k][j];
            }
        return z;
    };
    return matmul(matmul(h, a), h);
}

RatVec transform_point(const RatMat& m, const RatVec& x) {
    RatVec y(m.size(), Rational(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
    return y;
}

// ---------------------------------------------------------------------------
// facets of the secondary cone closure

namespace {

int tri_index(int i, int j) {
    if (i > j) std::swap(i, j);
    return i * 8 - i * (i - 1) / 2 + (j - i);
}

// flatten <M, Q> over the upper-triangle coordinates, scaled primitive
RatVec flatten_form(const SymMatrix& m) {
    RatVec a(36, Rational(0));
    for (int i = 0; i < 8; ++i)
        for (int j = i; j < 8; ++j)
            a[static_cast<size_t>(tri_index(i, j))] = (i == j ? m.at(i, j) : 2 * m.at(i, j));
    Integer lcm = 1;
    for (const auto& x : a) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    Integer gcd = 0;
    for (auto& x : a) {
        x *= lcm;
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), x.get_num_mpz_t());
    }
    if (gcd > 1)
        for (auto& x : a) x /= Rational(gcd);
    return a;
}

}  // namespace

FacetCount facet_count(const E8Model& model, const RegulatorSet& regs,
                       const SymMatrix& interior_form) {
    (void)model;
    // distinct primitive normals
    RatMat normals;
    std::map<std::string, size_t> index;
    for (const auto& r : regs.regulators) {
        RatVec a = flatten_form(r.form_matrix());
        std::string k = key_of(a);
        if (index.emplace(k, normals.size()).second) normals.push_back(std::move(a));
    }
    // orbit partition under transpositions of coordinates 1..7 acting on
    // index pairs (pure permutations of the 36 entries)
    std::array<std::array<int, 36>, 6> perms{};
    for (int t = 1; t <= 6; ++t) {
        auto sigma = [&](int i) { return i == t ? t + 1 : (i == t + 1 ? t : i); };
        for (int i = 0; i < 8; ++i)
            for (int j = i; j < 8; ++j)
                perms[static_cast<size_t>(t - 1)][static_cast<size_t>(tri_index(i, j))] =
                    tri_index(sigma(i), sigma(j));
    }
    std::vector<int> orbit_of(normals.size(), -1);
    std::vector<std::vector<size_t>> orbits;
    for (size_t start = 0; start < normals.size(); ++start) {
        if (orbit_of[start] >= 0) continue;
        int oid = static_cast<int>(orbits.size());
        std::vector<size_t> queue{start}, members{start};
        orbit_of[start] = oid;
        while (!queue.empty()) {
            size_t cur = queue.back();
            queue.pop_back();
            for (const auto& perm : perms) {
                RatVec image(36);
                for (int e = 0; e < 36; ++e)
                    image[static_cast<size_t>(perm[static_cast<size_t>(e)])] =
                        normals[cur][static_cast<size_t>(e)];
                auto it = index.find(key_of(image));
                if (it == index.end())
                    throw std::logic_error("facet_count: orbit image is not a candidate");
                if (orbit_of[it->second] < 0) {
                    orbit_of[it->second] = oid;
                    queue.push_back(it->second);
                    members.push_back(it->second);
                }
            }
        }
        orbits.push_back(std::move(members));
    }

    RatVec interior = flatten_form(interior_form);
    // flatten_form doubles the off-diagonal weights of the *normal*; the
    // interior must be plain coordinates (Q_ii, Q_ij), so rebuild it directly
    for (int i = 0; i < 8; ++i)
        for (int j = i; j < 8; ++j)
            interior[static_cast<size_t>(tri_index(i, j))] = interior_form.at(i, j);

    std::vector<bool> facet = irredundant_inequalities(normals, orbits, interior);
    FacetCount out;
    out.candidates = static_cast<long>(normals.size());
    out.orbit_classes = static_cast<long>(orbits.size());
    for (size_t j = 0; j < normals.size(); ++j) {
        if (!facet[j]) continue;
        out.facets += 1;
        Rational trace_pairing = 0;
        for (int i = 0; i < 8; ++i) trace_pairing += normals[j][static_cast<size_t>(tri_index(i, i))];
        if (trace_pairing == 0) out.through_e8 += 1;
    }
    return out;
}

}  // namespace covlat
