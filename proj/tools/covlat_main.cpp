// covlat: exact certification of lattice sphere coverings.
//
// Every subcommand prints a machine-readable JSON artifact to stdout or
// --out. Exit codes: 0 verified/success, 2 verification rejected,
// 1 usage or data error. Artifacts are byte-deterministic; the run
// manifest (which carries the wall time) is kept in a separate file.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <thread>
#include <iostream>

#include "covlat/json_io.hpp"

using namespace covlat;
using Clock = std::chrono::steady_clock;

namespace {

constexpr const char* kVersion = "covlat 1.0.0";

struct Output {
    std::string out_path;  // empty: stdout
    bool with_manifest = false;
    std::string command;
    Json inputs = Json::object();
    Clock::time_point started = Clock::now();

    int finish(const Json& artifact, int exit_code) const {
        std::string text = artifact.dump(2);
        text.push_back('\n');
        std::vector<std::string> outputs;
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(out_path);
            if (!f) {
                std::cerr << "cannot write " << out_path << "\n";
                return 1;
            }
            f << text;
            outputs.push_back(out_path);
        }
        if (with_manifest) {
            Json manifest;
            manifest["command"] = command;
            manifest["version"] = kVersion;
            manifest["inputs"] = inputs;
            manifest["data_checksums"] = {
                {"leech_generator_fnv1a",
                 std::to_string(leech_generator_checksum(embedded_leech_generator()))}};
            manifest["wall_time_s"] =
                std::chrono::duration<double>(Clock::now() - started).count();
            manifest["outputs"] = outputs;
            if (out_path.empty()) {
                std::cerr << manifest.dump() << "\n";
            } else {
                std::ofstream mf(out_path + ".manifest.json");
                mf << manifest.dump(2) << "\n";
            }
        }
        return exit_code;
    }
};

const PeriodicTriangulation& named_triangulation(const std::string& name) {
    static const auto cands = candidate_triangulations(E8Model::instance());
    const std::vector<int> sel = name == "I1" ? std::vector<int>{1, 3, 6, 10, 11, 12, 13}
                                              : std::vector<int>{1, 6, 7, 11, 12, 13, 20};
    for (const auto& t : cands)
        if (t.orbit_selection == sel) return t;
    throw std::runtime_error("triangulation " + name + " not found");
}

uint64_t file_checksum(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    uint64_t h = 1469598103934665603ull;
    char c;
    while (f.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certification of lattice sphere coverings"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string out_path;
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    bool long_running = false;
    std::string denominator_bound = "1000000000000";
    app.add_option("--out", out_path, "write the JSON artifact to this file");
    app.add_option("--threads", threads, "worker threads for shell sums and radii");
    app.add_flag("--long-running", long_running, "allow multi-minute verifications");
    app.add_option("--denominator-bound", denominator_bound,
                   "denominator bound for rationalization");

    auto* e8 = app.add_subcommand("e8", "root lattice combinatorics");
    e8->require_subcommand(1);
    auto* e8_info = e8->add_subcommand("info", "shell and cell counts");
    auto* e8_classes = e8->add_subcommand("classes", "the 135 diagonal classes");
    auto* e8_orbits = e8->add_subcommand("orbits", "norm-4 orbits under G");
    auto* e8_triangulations =
        e8->add_subcommand("triangulations", "G-invariant refining triangulations");
    auto* e8_regulators = e8->add_subcommand("regulators", "secondary cone inequalities");
    std::string tri_name = "I1";
    e8_regulators->add_option("--triangulation", tri_name, "I1 or I2")
        ->check(CLI::IsMember({"I1", "I2"}));

    auto* optimize_cmd = app.add_subcommand("optimize", "determinant maximization over the cone");
    std::string opt_tri = "I1";
    optimize_cmd->add_option("--triangulation", opt_tri, "I1 or I2")
        ->check(CLI::IsMember({"I1", "I2"}));

    auto* certify_cmd = app.add_subcommand("certify", "exact certificate for a rational form");
    std::string q_path, threshold = "3.2013", cert_tri = "I1";
    certify_cmd->add_option("--q", q_path, "JSON file holding the form")->required();
    certify_cmd->add_option("--threshold", threshold, "decimal covering density threshold");
    certify_cmd->add_option("--triangulation", cert_tri, "I1 or I2")
        ->check(CLI::IsMember({"I1", "I2"}));

    auto* leech = app.add_subcommand("leech", "Leech lattice verifications");
    leech->require_subcommand(1);
    auto* leech_bound = leech->add_subcommand("bound", "local optimality certificate");
    auto* leech_design = leech->add_subcommand("design-check", "shell 2-design identities");
    long design_norm = 4;
    leech_design->add_option("--norm", design_norm, "shell norm (4, or 6 with --long-running)");

    auto* rigidity_cmd = app.add_subcommand("rigidity", "rigidity constraint systems");
    int rig_dim = 8;
    rigidity_cmd->add_option("--dim", rig_dim, "dimension (8 or 24; 2..24 accepted)")
        ->check(CLI::Range(2, 24));

    auto* gamma_cmd = app.add_subcommand("gamma", "packing-covering constant");
    auto* bounds_cmd = app.add_subcommand("bounds", "moment form covering bounds");
    std::string lattice = "e8";
    gamma_cmd->add_option("--lattice", lattice, "e8 or leech")
        ->check(CLI::IsMember({"e8", "leech"}));
    std::string bounds_lattice = "e8";
    bounds_cmd->add_option("--lattice", bounds_lattice, "e8 or leech")
        ->check(CLI::IsMember({"e8", "leech"}));

    auto* reference_cmd =
        app.add_subcommand("reference-info", "diagnostic of the published reference form");

    CLI11_PARSE(app, argc, argv);

    Output out;
    out.out_path = out_path;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) out.command += ' ';
        out.command += argv[i];
    }

    try {
        if (*e8_info) {
            const E8Model& m = E8Model::instance();
            Json j;
            j["shell2"] = m.shell_std(2).size();
            j["shell4"] = m.shell_std(4).size();
            j["classes"] = diagonal_classes(m).size();
            j["simplex_centers"] = simplices_of_subdivision(m).size();
            return out.finish(j, 0);
        }
        if (*e8_classes) {
            Json j = Json::array();
            for (const auto& c : diagonal_classes(E8Model::instance())) {
                Json jc;
                jc["representative"] = vec_json(c.representative);
                jc["type"] = c.type == DiagonalClassType::axis        ? "axis"
                             : c.type == DiagonalClassType::quadruple ? "quadruple"
                                                                      : "halfinteger";
                Json members = Json::array();
                for (const auto& v : c.members) members.push_back(vec_json(v));
                jc["members"] = members;
                j.push_back(jc);
            }
            return out.finish(j, 0);
        }
        if (*e8_orbits) {
            Json j = Json::array();
            for (const auto& o : g_orbits(E8Model::instance())) {
                Json jo;
                jo["id"] = o.id;
                jo["representative"] = vec_json(o.representative);
                jo["pair_count"] = o.pair_count;
                jo["vector_count"] = o.members.size();
                j.push_back(jo);
            }
            return out.finish(j, 0);
        }
        if (*e8_triangulations) {
            const E8Model& m = E8Model::instance();
            Json j = Json::array();
            for (const auto& t : candidate_triangulations(m))
                j.push_back(triangulation_json(t, delone_feasible(m, t)));
            return out.finish(j, 0);
        }
        if (*e8_regulators) {
            const E8Model& m = E8Model::instance();
            RegulatorSet rs = regulators(m, named_triangulation(tri_name));
            Json j;
            j["triangulation"] = tri_name;
            j["instances"] = {{"type1", rs.type1_instances},
                              {"type2", rs.type2_instances},
                              {"type3", rs.type3_instances}};
            Json forms = Json::array();
            for (const auto& r : rs.regulators) forms.push_back(regulator_json(r));
            j["forms"] = forms;
            return out.finish(j, 0);
        }
        if (*optimize_cmd) {
            out.with_manifest = true;
            out.inputs["triangulation"] = opt_tri;
            out.inputs["denominator_bound"] = denominator_bound;
            const E8Model& m = E8Model::instance();
            const PeriodicTriangulation& t = named_triangulation(opt_tri);
            RegulatorSet rs = regulators(m, t);
            CoveringOptimizer opt(m, t, rs);
            OptimizeResult r = opt.run();
            PQF q = rationalize(opt, r, Integer(denominator_bound));
            Json j;
            j["triangulation"] = opt_tri;
            j["q"] = matrix_json(q.matrix());
            j["float_diagnostics"] = {{"det", r.det},
                                      {"mu", r.mu},
                                      {"theta", r.theta},
                                      {"outer_iterations", r.outer_iterations},
                                      {"active_regulators", r.active_regulators.size()},
                                      {"active_circumradius", r.active_circumradius}};
            return out.finish(j, 0);
        }
        if (*certify_cmd) {
            out.with_manifest = true;
            out.inputs["q"] = q_path;
            out.inputs["q_checksum"] = std::to_string(file_checksum(q_path));
            out.inputs["threshold"] = threshold;
            out.inputs["triangulation"] = cert_tri;
            std::ifstream f(q_path);
            if (!f) throw std::runtime_error("cannot read " + q_path);
            Json jq = Json::parse(f);
            SymMatrix q = matrix_from_json(jq.contains("q") ? jq["q"] : jq);
            const E8Model& m = E8Model::instance();
            const PeriodicTriangulation& t = named_triangulation(cert_tri);
            RegulatorSet rs = regulators(m, t);
            try {
                Certificate cert = certify(m, t, rs, q, threshold, threads);
                int code = cert.verdict == Verdict::less ? 0 : 2;
                return out.finish(certificate_json(cert), code);
            } catch (const CertifyRejection& e) {
                Json j;
                j["rejected"] = true;
                j["stage"] = e.stage;
                j["regulator_index"] = e.detail_index;
                if (e.stage == "regulators" && e.detail_index >= 0)
                    j["regulator"] =
                        regulator_json(rs.regulators[static_cast<size_t>(e.detail_index)]);
                j["message"] = e.what();
                return out.finish(j, 2);
            }
        }
        if (*leech_bound) {
            out.with_manifest = true;
            LeechModel m = build_leech(threads);
            Theorem1Report r = theorem1_certificate(m, threads);
            Json j = theorem1_json(r);
            return out.finish(j, r.tight && r.design_identity_norm4 ? 0 : 2);
        }
        if (*leech_design) {
            out.with_manifest = true;
            out.inputs["norm"] = design_norm;
            if (design_norm != 4 && design_norm != 6)
                throw std::runtime_error("design-check supports norms 4 and 6");
            if (design_norm == 6 && !long_running)
                throw std::runtime_error("the norm-6 shell has 16777216-scale size; "
                                         "pass --long-running to sum it");
            LeechModel m = build_leech(threads);
            Json j;
            j["norm"] = design_norm;
            bool ok;
            long count = 0;
            if (design_norm == 4) {
                ok = design_identity_check(m.gram(), m.minimal_shell().vectors, 4);
                count = static_cast<long>(m.minimal_shell().vectors.size());
            } else {
                ok = design_identity_check_streaming(m.gram(), 6, threads, &count);
            }
            j["shell_size"] = count;
            j["identity_holds"] = ok;
            return out.finish(j, ok ? 0 : 2);
        }
        if (*rigidity_cmd) {
            out.with_manifest = true;
            out.inputs["dim"] = rig_dim;
            RigidityResult r = rigidity_verdict(rig_dim);
            bool verified = r.nullspace_dim == 1 && r.basis_is_identity;
            return out.finish(rigidity_json(r), verified ? 0 : 2);
        }
        if (*gamma_cmd) {
            Json j;
            if (lattice == "e8") {
                const E8Model& m = E8Model::instance();
                Rational mu = e8_inhomogeneous_minimum(m);
                j["lattice"] = "e8";
                j["mu"] = rational_json(mu);
                j["lambda"] = rational_json(homogeneous_minimum(m.gram()));
                j["gamma_sq"] = rational_json(gamma_sq(m.gram(), mu));
            } else {
                LeechModel m = build_leech(threads);
                j["lattice"] = "leech";
                j["mu"] = rational_json(m.mu());
                j["lambda"] = rational_json(homogeneous_minimum(m.gram()));
                j["gamma_sq"] = rational_json(gamma_sq(m.gram(), m.mu()));
            }
            return out.finish(j, 0);
        }
        if (*bounds_cmd) {
            Json j;
            if (bounds_lattice == "e8") {
                const E8Model& m = E8Model::instance();
                std::vector<Simplex> simps;
                for (const auto& s : simplex_representatives(m)) {
                    Simplex bs;
                    for (const auto& v : s.vertices) bs.vertices.push_back(m.to_basis(v));
                    simps.push_back(std::move(bs));
                }
                MomentForm f = moment_form(simps);
                SymMatrix gram_inv = inverse(m.gram().matrix());
                Rational bound = covering_bound_sq(f.matrix, 8);
                Rational mu = e8_inhomogeneous_minimum(m);
                Rational density = covering_density_sq_ratio(m.gram(), mu);
                j["lattice"] = "e8";
                j["moment_form_is_inverse_gram"] = (f.matrix == gram_inv);
                j["covering_bound_sq_ratio"] = rational_json(bound);
                j["covering_density_sq_ratio"] = rational_json(density);
                j["bound_not_exceeding_density"] = (bound <= density);
            } else {
                LeechModel m = build_leech(threads);
                Theorem1Report r = theorem1_certificate(m, threads);
                j["lattice"] = "leech";
                j["moment_form_det"] = rational_json(r.moment_form_det);
                j["covering_bound_sq_ratio"] = rational_json(r.bound_sq_ratio);
                j["covering_density_sq_ratio"] = rational_json(r.theta_sq_ratio);
                j["bound_not_exceeding_density"] = (r.bound_sq_ratio <= r.theta_sq_ratio);
            }
            return out.finish(j, 0);
        }
        if (*reference_cmd) {
            ReferenceDiagnostic d = reference_form_diagnostic();
            Json j;
            j["q_tilde"] = matrix_json(d.q_tilde);
            j["det"] = rational_json(d.det);
            j["trace"] = rational_json(d.trace);
            j["positive_definite"] = d.positive_definite;
            j["note"] = "reference data only; the lattice basis behind it is unstated, "
                        "so certification runs against this artifact's own optimum";
            return out.finish(j, 0);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "no subcommand executed\n";
    return 1;
}
