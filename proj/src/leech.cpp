#include "covlat/leech.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace covlat {

bool leech_contains_unscaled(const GolayCode& code, const std::vector<Integer>& x) {
    if (x.size() != 24) return false;
    const int m = mpz_odd_p(x[0].get_mpz_t()) ? 1 : 0;
    Integer sum = 0;
    uint32_t word = 0;
    for (int i = 0; i < 24; ++i) {
        if ((mpz_odd_p(x[static_cast<size_t>(i)].get_mpz_t()) ? 1 : 0) != m) return false;
        Integer y = (x[static_cast<size_t>(i)] - m) / 2;
        if (mpz_odd_p(y.get_mpz_t())) word |= (1u << i);
        sum += x[static_cast<size_t>(i)];
    }
    if (!code.contains(word)) return false;
    Integer rem = sum - 4 * m;
    return mpz_divisible_ui_p(rem.get_mpz_t(), 8) != 0;
}

IntMat construct_leech_generator() {
    GolayCode code;
    IntMat rows;
    // doubled codewords
    for (uint32_t cw : code.basis()) {
        std::vector<Integer> r(24, Integer(0));
        for (int i = 0; i < 24; ++i)
            if (cw >> i & 1) r[static_cast<size_t>(i)] = 2;
        rows.push_back(std::move(r));
    }
    // 4e_0 + 4e_i and 8e_0
    for (int i = 1; i < 24; ++i) {
        std::vector<Integer> r(24, Integer(0));
        r[0] = 4;
        r[static_cast<size_t>(i)] = 4;
        rows.push_back(std::move(r));
    }
    {
        std::vector<Integer> r(24, Integer(0));
        r[0] = 8;
        rows.push_back(std::move(r));
    }
    // the odd-congruence generator (-3, 1, ..., 1)
    {
        std::vector<Integer> r(24, Integer(1));
        r[0] = -3;
        rows.push_back(std::move(r));
    }
    for (const auto& r : rows)
        if (!leech_contains_unscaled(code, r))
            throw std::logic_error("leech: generating vector fails the congruence test");

    IntMat basis = hermite_normal_form(rows);
    if (basis.size() != 24) throw std::logic_error("leech: generating set is not full rank");
    Integer det = 1;
    for (int i = 0; i < 24; ++i) det *= basis[static_cast<size_t>(i)][static_cast<size_t>(i)];
    if (det != integer_pow(2, 36)) throw std::logic_error("leech: determinant is not 8^12");
    for (const auto& r : basis)
        if (!leech_contains_unscaled(code, r))
            throw std::logic_error("leech: Hermite row fails the congruence test");

    // Reduce: gram = (1/8) B B^t, then map the transform back to the basis.
    SymMatrix gram(24);
    for (int i = 0; i < 24; ++i)
        for (int j = i; j < 24; ++j) {
            Integer s = 0;
            for (int k = 0; k < 24; ++k)
                s += basis[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                     basis[static_cast<size_t>(j)][static_cast<size_t>(k)];
            if (!mpz_divisible_ui_p(s.get_mpz_t(), 8))
                throw std::logic_error("leech: inner product not divisible by 8");
            gram.set(i, j, Rational(s / 8));
        }
    IntMat u = lll_reduce_gram(gram);
    IntMat reduced(24, std::vector<Integer>(24, Integer(0)));
    for (int i = 0; i < 24; ++i)
        for (int j = 0; j < 24; ++j) {
            Integer s = 0;
            for (int k = 0; k < 24; ++k)
                s += u[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                     basis[static_cast<size_t>(k)][static_cast<size_t>(j)];
            reduced[static_cast<size_t>(i)][static_cast<size_t>(j)] = s;
        }
    return reduced;
}

uint64_t leech_generator_checksum(const IntMat& rows) {
    // FNV-1a over the canonical text serialization
    uint64_t h = 1469598103934665603ull;
    std::ostringstream os;
    os << "leech-generator-v1:";
    for (const auto& r : rows)
        for (const auto& e : r) os << e.get_str() << ' ';
    for (char c : os.str()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

IntMat load_generator_asset(const std::string& dir) {
    std::ifstream in(dir + "/leech_generator.txt");
    if (!in) throw std::runtime_error("cannot open " + dir + "/leech_generator.txt");
    std::string tag;
    uint64_t checksum = 0;
    in >> tag >> checksum;
    if (tag != "leech-generator-v1")
        throw std::runtime_error("unrecognized leech generator asset version: " + tag);
    IntMat rows(24, std::vector<Integer>(24));
    for (auto& r : rows)
        for (auto& e : r) {
            std::string tok;
            if (!(in >> tok)) throw std::runtime_error("truncated leech generator asset");
            e = Integer(tok);
        }
    if (leech_generator_checksum(rows) != checksum)
        throw std::runtime_error("leech generator asset checksum mismatch");
    return rows;
}

}  // namespace

LeechModel build_leech(int threads) {
    LeechModel model;
    const char* dir = std::getenv("COVERING_DATA_DIR");
    model.generator_ = dir ? load_generator_asset(dir) : embedded_leech_generator();

    const IntMat& b = model.generator_;
    if (b.size() != 24) throw std::runtime_error("leech generator must have 24 rows");
    SymMatrix gram(24);
    for (int i = 0; i < 24; ++i)
        for (int j = i; j < 24; ++j) {
            Integer s = 0;
            for (int k = 0; k < 24; ++k)
                s += b[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                     b[static_cast<size_t>(j)][static_cast<size_t>(k)];
            if (!mpz_divisible_ui_p(s.get_mpz_t(), 8))
                throw std::runtime_error("leech: Gram not divisible by 8");
            gram.set(i, j, Rational(s / 8));
        }
    for (int i = 0; i < 24; ++i)
        if (!mpz_even_p(gram.at(i, i).get_num_mpz_t()))
            throw std::runtime_error("leech: Gram diagonal not even");
    if (determinant(gram) != 1) throw std::runtime_error("leech: det(Gram) != 1");
    model.gram_ = PQF(std::move(gram));
    if (homogeneous_minimum(model.gram_) != 4)
        throw std::runtime_error("leech: homogeneous minimum != 4");
    model.shell4_ = enumerate_shell(model.gram_, 4, threads);
    if (model.shell4_.vectors.size() != 196560)
        throw std::runtime_error("leech: norm-4 shell size != 196560");
    return model;
}

const Shell& LeechModel::minimal_shell() const { return shell4_; }

// ---------------------------------------------------------------------------
// design identities and the local optimality certificate

namespace {

// Exact comparison of an int64-accumulated sum against (norm |S| / d) Q^-1.
bool sum_matches_design(const PQF& q, const std::vector<std::vector<long long>>& sum, long count,
                        const Rational& norm) {
    const int d = q.dim();
    SymMatrix target = inverse(q.matrix()) * (norm * Rational(count) / d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j)
            if (Rational(static_cast<long>(sum[static_cast<size_t>(i)][static_cast<size_t>(j)])) !=
                target.at(i, j))
                return false;
    return true;
}

}  // namespace

bool design_identity_check(const PQF& q, const std::vector<IntVec>& shell, const Rational& norm) {
    const int d = q.dim();
    std::vector<std::vector<long long>> sum(static_cast<size_t>(d),
                                            std::vector<long long>(static_cast<size_t>(d), 0));
    for (const auto& v : shell)
        for (int i = 0; i < d; ++i) {
            if (v[static_cast<size_t>(i)] == 0) continue;
            for (int j = i; j < d; ++j)
                sum[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
                    static_cast<long long>(v[static_cast<size_t>(i)]) * v[static_cast<size_t>(j)];
        }
    return sum_matches_design(q, sum, static_cast<long>(shell.size()), norm);
}

bool design_identity_check_streaming(const PQF& q, const Rational& norm, int threads,
                                     long* count_out) {
    const int d = q.dim();
    std::vector<std::vector<long long>> sum(static_cast<size_t>(d),
                                            std::vector<long long>(static_cast<size_t>(d), 0));
    long count = 0;
    enumerate_shell_streaming(
        q, norm,
        [&](const IntVec& v) {
            ++count;
            for (int i = 0; i < d; ++i) {
                if (v[static_cast<size_t>(i)] == 0) continue;
                for (int j = i; j < d; ++j)
                    sum[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
                        static_cast<long long>(v[static_cast<size_t>(i)]) *
                        v[static_cast<size_t>(j)];
            }
        },
        threads);
    if (count_out) *count_out = count;
    return sum_matches_design(q, sum, count, norm);
}

MomentForm leech_moment_form(const LeechModel& model) {
    const SimplexEdgeProfile profile;
    const int d = model.gram().dim();
    // per-edge averages over a norm-m shell equal (m/d) gram^-1
    Rational scalar = (Rational(profile.edges_norm4) * Rational(4, d) +
                       Rational(profile.edges_norm6) * Rational(6, d)) /
                      Rational(d + 1);
    MomentForm f;
    f.matrix = inverse(model.gram().matrix()) * scalar;
    f.simplex_count = 1;
    return f;
}

Theorem1Report theorem1_certificate(const LeechModel& model, int threads) {
    (void)threads;
    Theorem1Report r;
    r.theta_sq_ratio = covering_density_sq_ratio(model.gram(), model.mu());
    MomentForm f = leech_moment_form(model);
    r.moment_form_det = determinant(f.matrix);
    r.bound_sq_ratio = covering_bound_sq(f.matrix, model.gram().dim());
    r.tight = (r.theta_sq_ratio == r.bound_sq_ratio);
    r.shell4_size = static_cast<long>(model.minimal_shell().vectors.size());
    r.design_identity_norm4 = design_identity_check(model.gram(), model.minimal_shell().vectors, 4);
    return r;
}

}  // namespace covlat
