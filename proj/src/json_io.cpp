#include "covlat/json_io.hpp"

namespace covlat {

Json rational_json(const Rational& r) { return rational_to_string(r); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return rational_from_string(j.get<std::string>());
}

Json vec_json(const RatVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rational_json(x));
    return a;
}

RatVec vec_from_json(const Json& j) {
    RatVec v;
    for (const auto& e : j) v.push_back(rational_from_json(e));
    return v;
}

Json matrix_json(const SymMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(rational_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

SymMatrix matrix_from_json(const Json& j) {
    const int d = static_cast<int>(j.size());
    SymMatrix m(d);
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(j[static_cast<size_t>(i)].size()) != d)
            throw ParseError("matrix rows must all have the full dimension");
        for (int k = 0; k < d; ++k) {
            Rational v = rational_from_json(j[static_cast<size_t>(i)][static_cast<size_t>(k)]);
            if (k < i && v != m.at(i, k)) throw ParseError("matrix is not symmetric");
            m.set(i, k, v);
        }
    }
    return m;
}

Json shell_json(const Shell& s) {
    Json out;
    out["norm"] = rational_json(s.norm);
    out["count"] = s.vectors.size();
    Json vecs = Json::array();
    for (const auto& v : s.vectors) {
        Json row = Json::array();
        for (long e : v) row.push_back(e);
        vecs.push_back(row);
    }
    out["vectors"] = vecs;
    return out;
}

Json verdict_json(const Rational& theta_sq_ratio, const std::string& threshold, Verdict v) {
    Json out;
    out["theta_sq_ratio"] = rational_json(theta_sq_ratio);
    out["threshold"] = threshold;
    out["verdict"] = verdict_to_string(v);
    return out;
}

Json triangulation_json(const PeriodicTriangulation& t, bool feasible) {
    Json out;
    out["orbit_selection"] = t.orbit_selection;
    out["delone_feasible"] = feasible;
    Json diags = Json::array();
    for (const auto& d : t.diagonal_of_class) diags.push_back(vec_json(d));
    out["class_diagonals"] = diags;
    return out;
}

Json regulator_json(const Regulator& r) {
    Json out;
    switch (r.kind) {
        case RegulatorKind::type1: out["kind"] = "type1"; break;
        case RegulatorKind::type2: out["kind"] = "type2"; break;
        case RegulatorKind::type3: out["kind"] = "type3"; break;
    }
    Json terms = Json::array();
    for (const auto& [coeff, point] : r.terms) {
        Json term;
        term["coeff"] = rational_json(coeff);
        term["point"] = vec_json(point);
        terms.push_back(term);
    }
    out["terms"] = terms;
    return out;
}

Json certificate_json(const Certificate& c) {
    Json out;
    out["q"] = matrix_json(c.q);
    out["interior_witness"] = matrix_json(c.interior_witness.matrix());
    out["mu"] = rational_json(c.mu);
    out["det"] = rational_json(c.det);
    out["theta_sq_ratio"] = rational_json(c.theta_sq_ratio);
    out["threshold"] = c.threshold;
    out["verdict"] = verdict_to_string(c.verdict);
    out["regulator_forms"] = c.regulator_forms;
    out["zero_regulators"] = c.zero_regulators;
    out["pi_enclosure"] = {{"digits", pi_enclosure_digits()},
                           {"lower", rational_json(pi_lower())},
                           {"upper", rational_json(pi_upper())}};
    Json radii = Json::array();
    for (const auto& r : c.per_simplex_radius_sq) radii.push_back(rational_json(r));
    out["per_simplex_radius_sq"] = radii;
    return out;
}

Json theorem1_json(const Theorem1Report& r) {
    Json out;
    out["theta_sq_ratio"] = rational_json(r.theta_sq_ratio);
    out["bound_sq_ratio"] = rational_json(r.bound_sq_ratio);
    out["moment_form_det"] = rational_json(r.moment_form_det);
    out["bound_is_tight"] = r.tight;
    out["design_identity_norm4"] = r.design_identity_norm4;
    out["shell4_size"] = r.shell4_size;
    return out;
}

Json rigidity_json(const RigidityResult& r) {
    Json out;
    out["dimension"] = r.dimension;
    out["nullspace_dim"] = r.nullspace_dim;
    out["basis_is_identity"] = r.basis_is_identity;
    return out;
}

}  // namespace covlat
