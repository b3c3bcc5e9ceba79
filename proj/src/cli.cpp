#include "hyperpot/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperpot/error.hpp"
#include "hyperpot/geometry.hpp"
#include "hyperpot/lattice.hpp"
#include "hyperpot/milnor.hpp"
#include "hyperpot/poly_io.hpp"
#include "hyperpot/potential.hpp"
#include "hyperpot/verify.hpp"

namespace hyperpot {

namespace {

using nlohmann::json;

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(rat_from_string(item));
    if (out.empty()) raise("bad-parameters", "empty coordinate list");
    return out;
}

std::vector<long> parse_long_list(const std::string& text) {
    std::vector<long> out;
    for (const Rat& r : parse_rat_list(text)) {
        if (r.get_den() != 1) raise("bad-parameters", "expected integers in list");
        out.push_back(static_cast<long>(r.get_num().get_si()));
    }
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise("io-error", "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        raise("bad-json", std::string("malformed JSON in '") + path + "': " + e.what());
    }
    return j;
}

Int int_from_json(const json& j) {
    if (j.is_string()) {
        Rat r = rat_from_string(j.get<std::string>());
        if (r.get_den() != 1) raise("bad-json", "expected an integer");
        return r.get_num();
    }
    if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
    raise("bad-json", "expected an integer or integer string");
}

Lattice lattice_from_json(const json& j) {
    if (!j.contains("gram")) raise("bad-json", "lattice JSON needs 'gram'");
    Symmetry sym = Symmetry::symmetric;
    if (j.contains("symmetry")) {
        std::string s = j.at("symmetry").get<std::string>();
        if (s == "symmetric")
            sym = Symmetry::symmetric;
        else if (s == "skew")
            sym = Symmetry::skew;
        else
            raise("bad-json", "symmetry must be 'symmetric' or 'skew'");
    }
    std::vector<std::vector<Int>> gram;
    for (const auto& row : j.at("gram")) {
        std::vector<Int> r;
        for (const auto& entry : row) r.push_back(int_from_json(entry));
        gram.push_back(std::move(r));
    }
    return Lattice(std::move(gram), sym);
}

std::vector<CycleVector> cycles_from_json(const json& j) {
    std::vector<CycleVector> out;
    for (const auto& row : j) {
        CycleVector v;
        for (const auto& entry : row) v.push_back(int_from_json(entry));
        out.push_back(std::move(v));
    }
    return out;
}

GeneratorSet generators_from_json(const json& j, Lattice lattice) {
    if (!j.contains("generators")) raise("bad-json", "generator JSON needs 'generators'");
    std::vector<CycleVector> gens = cycles_from_json(j.at("generators"));
    std::vector<GeneratorKind> kinds;
    if (j.contains("kinds")) {
        for (const auto& k : j.at("kinds")) {
            std::string s = k.get<std::string>();
            if (s == "first")
                kinds.push_back(GeneratorKind::first);
            else if (s == "second")
                kinds.push_back(GeneratorKind::second);
            else
                raise("bad-json", "generator kind must be 'first' or 'second'");
        }
    }
    return GeneratorSet(std::move(lattice), std::move(gens), std::move(kinds));
}

CycleVector cycle_from_string(const std::string& text) {
    CycleVector v;
    for (const Rat& r : parse_rat_list(text)) {
        if (r.get_den() != 1) raise("bad-parameters", "cycle coordinates must be integers");
        v.push_back(r.get_num());
    }
    return v;
}

json cycle_to_json(const CycleVector& v) {
    json out = json::array();
    for (const Int& c : v) out.push_back(c.get_str());
    return out;
}

json spectrum_to_json(const std::set<Rat>& values) {
    json out = json::array();
    for (const Rat& v : values) out.push_back(rat_to_string(v));
    return out;
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
        if (!content.empty() && content.back() != '\n') out << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) raise("io-error", "cannot write '" + path + "'");
    f << content;
}

std::string json_dump(const json& j) { return j.dump(2) + "\n"; }

int effective_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("HYPERPOT_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    return 1;
}

struct RayScan {
    std::vector<double> origin, direction;
    double t0 = 0, t1 = 1;
    int samples = 0;
};

RayScan parse_ray(const std::string& text, int nvars) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) parts.push_back(item);
    if (parts.size() != 3) raise("bad-parameters", "ray needs 'origin;direction;t0,t1,n'");
    RayScan ray;
    ray.origin = doubles_from_rat_vector(parse_rat_list(parts[0]));
    ray.direction = doubles_from_rat_vector(parse_rat_list(parts[1]));
    if (static_cast<int>(ray.origin.size()) != nvars ||
        static_cast<int>(ray.direction.size()) != nvars)
        raise("bad-parameters", "ray origin/direction dimension mismatch");
    std::vector<Rat> range = parse_rat_list(parts[2]);
    if (range.size() != 3) raise("bad-parameters", "ray range needs t0,t1,nsamples");
    ray.t0 = rat_to_double(range[0]);
    ray.t1 = rat_to_double(range[1]);
    ray.samples = static_cast<int>(rat_to_double(range[2]));
    if (ray.samples < 0) raise("bad-parameters", "nsamples must be nonnegative");
    return ray;
}

Box default_box(int nvars) {
    Box box;
    for (int i = 0; i < nvars; ++i) {
        box.lo.emplace_back(-4);
        box.hi.emplace_back(4);
    }
    return box;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    std::ostringstream ss;
    ss.precision(15);
    ss << v;
    return ss.str();
}

// shared flags for potential/force
struct ChargeArgs {
    std::string poly_path, density_path, point, box_text, ray_text, out_path, signs_text;
    double tol = 1e-8;
    int grid = 0;
    int threads = 0;
};

SurfaceChargeSpec spec_from_args(const ChargeArgs& args) {
    MultiPoly F = poly_from_file(args.poly_path);
    MultiPoly density = args.density_path.empty()
                            ? MultiPoly::constant(F.nvars(), Rat(1))
                            : poly_from_file(args.density_path);
    Box box = args.box_text.empty() ? default_box(F.nvars())
                                    : box_from_string(args.box_text, F.nvars());
    int grid = args.grid > 0 ? args.grid : (F.nvars() == 2 ? 33 : 11);
    std::optional<std::vector<int>> signs;
    if (!args.signs_text.empty()) {
        std::vector<int> s;
        for (long v : parse_long_list(args.signs_text)) s.push_back(static_cast<int>(v));
        signs = std::move(s);
    }
    return SurfaceChargeSpec::build(F, density, box, grid, signs);
}

int run_charge_command(const ChargeArgs& args, bool force_mode, std::ostream& out) {
    SurfaceChargeSpec spec = spec_from_args(args);
    QuadConfig config;
    config.tol = args.tol;
    config.threads = effective_threads(args.threads);
    const int n = spec.F.nvars();

    if (!args.ray_text.empty()) {
        RayScan ray = parse_ray(args.ray_text, n);
        // zone labels along the ray reuse grid-discovered references
        Box box = args.box_text.empty() ? default_box(n) : box_from_string(args.box_text, n);
        int grid = args.grid > 0 ? args.grid : (n == 2 ? 33 : 11);
        std::vector<std::vector<Rat>> refs;
        {
            auto samples = sample_hyperbolicity_domain(spec.F, box, grid >= 5 ? grid : 5);
            for (const auto& s : samples)
                if (s.label.k == 0 && refs.size() < 2) refs.push_back(s.point);
        }
        std::ostringstream csv;
        csv << "t,potential,force_norm,zone\n";
        for (int i = 0; i < ray.samples; ++i) {
            double t = ray.samples == 1
                           ? ray.t0
                           : ray.t0 + (ray.t1 - ray.t0) * static_cast<double>(i) / (ray.samples - 1);
            std::vector<double> x(static_cast<std::size_t>(n));
            for (int c = 0; c < n; ++c)
                x[static_cast<std::size_t>(c)] = ray.origin[static_cast<std::size_t>(c)] +
                                                 t * ray.direction[static_cast<std::size_t>(c)];
            double u = std::nan("");
            double fnorm = std::nan("");
            int zone = -1;
            try {
                VectorQuadratureResult f = attraction_force(spec, x, config);
                double acc = 0;
                for (double c : f.value) acc += c * c;
                fnorm = std::sqrt(acc);
                if (n >= 3) u = potential(spec, x, config).value;
            } catch (const Error&) {
                // too close to the surface: leave nan columns for this sample
            }
            try {
                zone = zone_index(spec.F, rat_vector_from_doubles(x), refs).k;
            } catch (const Error&) {
                zone = -1;
            }
            csv << format_double(t) << "," << format_double(u) << "," << format_double(fnorm)
                << "," << zone << "\n";
        }
        write_output(args.out_path, csv.str(), out);
        return 0;
    }

    if (args.point.empty()) raise("bad-parameters", "need --point or --ray");
    std::vector<double> x = doubles_from_rat_vector(parse_rat_list(args.point));
    json result;
    if (force_mode) {
        VectorQuadratureResult f = attraction_force(spec, x, config);
        result["value"] = f.value;
        result["error_estimate"] = f.error_estimate;
        result["nodes_used"] = f.nodes_used;
        result["converged"] = f.converged;
    } else {
        QuadratureResult u = potential(spec, x, config);
        result["value"] = u.value;
        result["error_estimate"] = u.error_estimate;
        result["nodes_used"] = u.nodes_used;
        result["converged"] = u.converged;
    }
    write_output(args.out_path, json_dump(result), out);
    return 0;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"computable monodromy lattices, hyperbolic zones, and surface potentials"};
    app.require_subcommand(1);

    // milnor
    long milnor_d = 0, milnor_n = 0;
    std::string milnor_out;
    CLI::App* milnor_cmd = app.add_subcommand("milnor", "closed-form Milnor numbers and ranks");
    milnor_cmd->add_option("--d", milnor_d, "degree")->required();
    milnor_cmd->add_option("--n", milnor_n, "ambient dimension")->required();
    milnor_cmd->add_option("--out", milnor_out, "output file (default stdout)");

    // hyperbolic
    std::string hy_poly, hy_point, hy_out;
    int hy_ndirs = 1000;
    std::uint64_t hy_seed = 0;
    CLI::App* hy_cmd = app.add_subcommand("hyperbolic", "sampled strict-hyperbolicity test");
    hy_cmd->add_option("--poly", hy_poly, "polynomial JSON file")->required();
    hy_cmd->add_option("--point", hy_point, "reference point, comma separated")->required();
    hy_cmd->add_option("--ndirs", hy_ndirs, "number of directions");
    hy_cmd->add_option("--seed", hy_seed, "direction sampling seed");
    hy_cmd->add_option("--out", hy_out, "output file (default stdout)");

    // zones
    std::string zn_poly, zn_box, zn_out;
    int zn_grid = 41, zn_ndirs = 48;
    std::uint64_t zn_seed = 0;
    CLI::App* zn_cmd = app.add_subcommand("zones", "grid zone classification CSV");
    zn_cmd->add_option("--poly", zn_poly, "polynomial JSON file")->required();
    zn_cmd->add_option("--box", zn_box, "box lo,hi per axis")->required();
    zn_cmd->add_option("--grid", zn_grid, "grid points per axis");
    zn_cmd->add_option("--ndirs", zn_ndirs, "hyperbolicity directions");
    zn_cmd->add_option("--seed", zn_seed, "sampling seed");
    zn_cmd->add_option("--out", zn_out, "output CSV file (default stdout)");

    // potential / force
    ChargeArgs pot_args, force_args;
    CLI::App* pot_cmd = app.add_subcommand("potential", "surface potential of the standard charge");
    CLI::App* force_cmd = app.add_subcommand("force", "attraction force of the standard charge");
    for (auto [cmd, cargs] : {std::pair{pot_cmd, &pot_args}, std::pair{force_cmd, &force_args}}) {
        cmd->add_option("--poly", cargs->poly_path, "polynomial JSON file")->required();
        cmd->add_option("--density", cargs->density_path, "density polynomial JSON file");
        cmd->add_option("--point", cargs->point, "evaluation point");
        cmd->add_option("--ray", cargs->ray_text, "ray scan 'origin;direction;t0,t1,n' (CSV out)");
        cmd->add_option("--tol", cargs->tol, "quadrature tolerance");
        cmd->add_option("--box", cargs->box_text, "component search box");
        cmd->add_option("--grid", cargs->grid, "component search grid");
        cmd->add_option("--signs", cargs->signs_text, "component sign override, e.g. '1,-1'");
        cmd->add_option("--threads", cargs->threads, "parallel patch integrals");
        cmd->add_option("--out", cargs->out_path, "output file (default stdout)");
    }

    // orbit
    std::string orb_lattice, orb_gens, orb_start, orb_form, orb_out, orb_action = "auto";
    std::size_t orb_max_size = 100000, orb_max_depth = 256;
    bool orb_allow_truncated = false, orb_emit_vectors = false;
    CLI::App* orb_cmd = app.add_subcommand("orbit", "monodromy orbit closure and value spectrum");
    orb_cmd->add_option("--lattice", orb_lattice, "lattice JSON file")->required();
    orb_cmd->add_option("--generators", orb_gens, "generator JSON file")->required();
    orb_cmd->add_option("--start", orb_start, "start cycle, comma separated")->required();
    orb_cmd->add_option("--form", orb_form, "linear form coefficients");
    orb_cmd->add_option("--action", orb_action, "auto | reflect | transvect");
    orb_cmd->add_option("--max-size", orb_max_size, "orbit size limit");
    orb_cmd->add_option("--max-depth", orb_max_depth, "BFS depth limit");
    orb_cmd->add_flag("--allow-truncated-spectrum", orb_allow_truncated,
                      "compute the spectrum even if truncated");
    orb_cmd->add_flag("--emit-vectors", orb_emit_vectors, "include orbit vectors in the output");
    orb_cmd->add_option("--out", orb_out, "output file (default stdout)");

    // probe
    std::string pr_lattice, pr_gens, pr_start, pr_form, pr_schedule = "4,8,16,32", pr_out;
    CLI::App* pr_cmd = app.add_subcommand("probe", "orbit growth probe for complete infiniteness");
    pr_cmd->add_option("--lattice", pr_lattice, "lattice JSON file")->required();
    pr_cmd->add_option("--generators", pr_gens, "generator JSON file")->required();
    pr_cmd->add_option("--start", pr_start, "start cycle")->required();
    pr_cmd->add_option("--form", pr_form, "linear form coefficients")->required();
    pr_cmd->add_option("--schedule", pr_schedule, "depth schedule, e.g. 4,8,16,32");
    pr_cmd->add_option("--out", pr_out, "output file (default stdout)");

    // model
    std::string model_kind, model_out;
    int model_m = 4, model_zero = 0, model_k = 1, model_total = 1, model_sign = 1;
    int model_d = 2, model_eta = 0, model_kk = 1;
    CLI::App* model_cmd = app.add_subcommand("model", "named lattice model builders");
    model_cmd->add_option("--kind", model_kind, "dtilde | hyperbolic | plane-curve")->required();
    model_cmd->add_option("--m", model_m, "dtilde: extended system D~m");
    model_cmd->add_option("--zero-summand", model_zero, "dtilde: zero-form summand rank");
    model_cmd->add_option("--k", model_k, "hyperbolic: zone index k");
    model_cmd->add_option("--total", model_total, "hyperbolic: lattice rank");
    model_cmd->add_option("--parity-sign", model_sign, "hyperbolic: +1 or -1");
    model_cmd->add_option("--d", model_d, "plane-curve: degree");
    model_cmd->add_option("--eta", model_eta, "plane-curve: eta");
    model_cmd->add_option("--kzone", model_kk, "plane-curve: zone");
    model_cmd->add_option("--out", model_out, "output file (default stdout)");

    // verify
    std::string verify_name;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a named acceptance suite");
    verify_cmd->add_option("suite", verify_name, "newton|arnold|ivory|theorem4|lattice|milnor")
        ->required();

    try {
        std::vector<std::string> argv(args);
        std::reverse(argv.begin(), argv.end()); // CLI11 parses reversed vectors
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream usage;
        int code = app.exit(e, usage, usage);
        if (code == 0) {
            out << usage.str();
            return 0;
        }
        err << usage.str();
        return 2;
    }

    try {
        if (milnor_cmd->parsed()) {
            RankReport r = rank_H(milnor_d, milnor_n);
            json j;
            j["d"] = milnor_d;
            j["n"] = milnor_n;
            j["mu_tilde"] = r.mu_tilde.get_str();
            j["mu"] = r.mu.get_str();
            j["nu"] = r.nu.get_str();
            j["rank_H"] = r.rank_H.get_str();
            write_output(milnor_out, json_dump(j), out);
            return 0;
        }
        if (hy_cmd->parsed()) {
            MultiPoly F = poly_from_file(hy_poly);
            HyperbolicityReport rep = is_strictly_hyperbolic(F, parse_rat_list(hy_point), hy_ndirs,
                                                             hy_seed);
            json j;
            j["is_hyperbolic"] = rep.is_hyperbolic;
            if (rep.witness_direction)
                j["witness_direction"] = *rep.witness_direction;
            else
                j["witness_direction"] = nullptr;
            j["tested_directions"] = rep.tested_directions;
            j["mode"] = rep.mode;
            write_output(hy_out, json_dump(j), out);
            return 0;
        }
        if (zn_cmd->parsed()) {
            MultiPoly F = poly_from_file(zn_poly);
            Box box = box_from_string(zn_box, F.nvars());
            auto samples = sample_hyperbolicity_domain(F, box, zn_grid, zn_ndirs, zn_seed);
            std::ostringstream csv;
            for (int i = 0; i < F.nvars(); ++i) csv << "x" << (i + 1) << ",";
            csv << "k\n";
            for (const auto& s : samples) {
                for (const Rat& c : s.point) csv << format_double(rat_to_double(c)) << ",";
                csv << s.label.k << "\n";
            }
            write_output(zn_out, csv.str(), out);
            return 0;
        }
        if (pot_cmd->parsed()) return run_charge_command(pot_args, false, out);
        if (force_cmd->parsed()) return run_charge_command(force_args, true, out);
        if (orb_cmd->parsed()) {
            GeneratorSet gens =
                generators_from_json(load_json_file(orb_gens), lattice_from_json(load_json_file(orb_lattice)));
            if (orb_action == "reflect" && gens.lattice.symmetry() != Symmetry::symmetric)
                raise("symmetric-required", "reflection requires symmetric lattice");
            if (orb_action == "transvect" && gens.lattice.symmetry() != Symmetry::skew)
                raise("skew-required", "transvection requires skew lattice");
            if (orb_action != "auto" && orb_action != "reflect" && orb_action != "transvect")
                raise("bad-parameters", "action must be auto, reflect, or transvect");
            OrbitReport report =
                orbit(gens, cycle_from_string(orb_start), orb_max_size, orb_max_depth);
            json j;
            j["size"] = report.vectors.size();
            j["status"] = report.status == OrbitStatus::closed ? "closed" : "truncated";
            j["depth_profile"] = report.depth_profile;
            if (!orb_form.empty()) {
                LinearForm form{parse_rat_list(orb_form)};
                report.spectrum = value_spectrum(form, report, orb_allow_truncated);
                j["spectrum"] = spectrum_to_json(*report.spectrum);
            }
            if (orb_emit_vectors) {
                json vecs = json::array();
                for (const CycleVector& v : report.vectors) vecs.push_back(cycle_to_json(v));
                j["vectors"] = std::move(vecs);
            }
            write_output(orb_out, json_dump(j), out);
            return 0;
        }
        if (pr_cmd->parsed()) {
            GeneratorSet gens =
                generators_from_json(load_json_file(pr_gens), lattice_from_json(load_json_file(pr_lattice)));
            std::vector<std::size_t> schedule;
            for (long v : parse_long_list(pr_schedule)) {
                if (v <= 0) raise("bad-parameters", "schedule depths must be positive");
                schedule.push_back(static_cast<std::size_t>(v));
            }
            GrowthReport g = probe_completely_infinite(gens, cycle_from_string(pr_start),
                                                       LinearForm{parse_rat_list(pr_form)}, schedule);
            json j;
            j["depths"] = g.depths;
            j["orbit_sizes"] = g.orbit_sizes;
            j["value_counts"] = g.value_counts;
            j["verdict"] = g.verdict_string();
            write_output(pr_out, json_dump(j), out);
            return 0;
        }
        if (model_cmd->parsed()) {
            json j;
            if (model_kind == "dtilde") {
                GeneratorSet g = build_D_tilde(model_m, model_zero);
                json gram = json::array();
                for (const auto& row : g.lattice.gram()) {
                    json r = json::array();
                    for (const Int& v : row) r.push_back(v.get_str());
                    gram.push_back(std::move(r));
                }
                j["gram"] = std::move(gram);
                json gens = json::array();
                for (const CycleVector& v : g.generators) gens.push_back(cycle_to_json(v));
                j["generators"] = std::move(gens);
                j["kernel_rank"] = form_kernel(g.lattice).size();
            } else if (model_kind == "hyperbolic") {
                ModelHyperbolic m = build_model_hyperbolic(model_k, model_total, model_sign);
                j["arnold_class"] = cycle_to_json(m.arnold_class);
                j["self_pairing"] =
                    m.generators.lattice.inner(m.arnold_class, m.arnold_class).get_str();
                json kinds = json::array();
                for (GeneratorKind k : m.generators.kinds)
                    kinds.push_back(k == GeneratorKind::first ? "first" : "second");
                j["kinds"] = std::move(kinds);
                j["rank"] = m.generators.lattice.rank();
            } else if (model_kind == "plane-curve") {
                PlaneCurveModel m = build_plane_curve_model(model_d, model_eta, model_kk);
                j["orbit_size"] = m.orbit_size();
                std::vector<Rat> wa, wb;
                plane_curve_standard_weights(model_d - model_eta, wa, wb);
                j["spectrum_size"] = plane_curve_spectrum(m, wa, wb).size();
            } else {
                raise("bad-parameters", "model kind must be dtilde, hyperbolic, or plane-curve");
            }
            write_output(model_out, json_dump(j), out);
            return 0;
        }
        if (verify_cmd->parsed()) {
            SuiteReport report = verify_suite(verify_name);
            for (const CheckResult& c : report.checks)
                out << (c.pass ? "[PASS] " : "[FAIL] ") << report.suite << ": " << c.name << " ("
                    << c.detail << ")\n";
            out << (report.all_pass() ? "[PASS] " : "[FAIL] ") << "suite " << report.suite
                << " in " << format_double(report.seconds) << " s\n";
            return report.all_pass() ? 0 : 1;
        }
        raise("bad-parameters", "no subcommand selected");
    } catch (const Error& e) {
        json j;
        j["error"]["code"] = e.code();
        j["error"]["message"] = e.what();
        err << j.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json j;
        j["error"]["code"] = "internal";
        j["error"]["message"] = e.what();
        err << j.dump() << "\n";
        return 1;
    }
    return 0;
}

} // namespace hyperpot
