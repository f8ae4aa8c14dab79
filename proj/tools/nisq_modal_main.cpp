// nisq-modal: coupled-oscillator modal analysis with a simulated
// NISQ-style eigenvalue estimation pipeline and device suitability checks.
//
// Subcommands:
//   model     build a geometry, export its dynamical matrix and topology
//   estimate  run the hybrid eigenvalue estimation for one geometry
//   sweep     run repeated estimations over a geometry ladder (CSV/JSON)
//   assess    gate a workload against a device from the bundled registry

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "nisqmodal/encoding.hpp"
#include "nisqmodal/qpi.hpp"
#include "nisqmodal/sweep.hpp"

namespace {

using namespace nisqmodal;

constexpr std::uint64_t kDefaultSeed = 1234;

// Stdout formatting: fixed-width enough to be reproducible byte for byte,
// short enough to read. Data files keep full %.17g precision.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::uint64_t default_seed() {
    const char* env = std::getenv("NISQ_MODAL_SEED");
    if (!env || *env == '\0') return kDefaultSeed;
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
        throw std::runtime_error("NISQ_MODAL_SEED must be an unsigned integer");
    return parsed;
}

struct RunConfig {
    std::string subcommand;
    std::string geometry;                 // model / estimate / assess
    std::vector<std::string> geometries;  // sweep; empty = standard ladder
    double noise_f = 0.993;
    std::string shots_text = "4096";  // integer or "analytic"
    int repetitions = 100;
    std::uint64_t seed = kDefaultSeed;
    std::string out;
    std::string format = "csv";  // csv | json
    int jobs = 0;                // <= 0: hardware concurrency
    int k = -1;                  // -1: maximum eigenpair
    std::string device;
    std::string registry;  // empty: bundled table
    long long n_steps = 5000000;
    bool parallel_flagged = false;
    double fidelity_floor = 0.5;
    long long threshold_system_size = 1 << 10;
    long long threshold_steps = 1000000;
};

int parse_shots(const std::string& text) {
    if (text == "analytic") return 0;
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("shots must be a positive integer or 'analytic'");
    }
    if (used != text.size() || value < 1 || value > 100000000)
        throw std::invalid_argument("shots must be a positive integer or 'analytic'");
    return static_cast<int>(value);
}

OscillatorSystem parse_geometry(const std::string& selector) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= selector.size()) {
        const std::size_t colon = selector.find(':', start);
        if (colon == std::string::npos) {
            parts.push_back(selector.substr(start));
            break;
        }
        parts.push_back(selector.substr(start, colon - start));
        start = colon + 1;
    }
    const std::string usage =
        "geometry selector must be chain:N[:fixed_fixed|fixed_free] or blade:a|b|c[:height_mm]";
    if (parts.empty()) throw std::invalid_argument(usage);

    if (parts[0] == "chain") {
        if (parts.size() < 2 || parts.size() > 3) throw std::invalid_argument(usage);
        int n = 0;
        try {
            n = std::stoi(parts[1]);
        } catch (const std::exception&) {
            throw std::invalid_argument(usage);
        }
        ChainBoundary boundary = ChainBoundary::fixed_fixed;
        if (parts.size() == 3) {
            if (parts[2] == "fixed_fixed")
                boundary = ChainBoundary::fixed_fixed;
            else if (parts[2] == "fixed_free")
                boundary = ChainBoundary::fixed_free;
            else
                throw std::invalid_argument(usage);
        }
        return build_chain(n, 1.0, 1.0, boundary);
    }
    if (parts[0] == "blade") {
        if (parts.size() < 2 || parts.size() > 3) throw std::invalid_argument(usage);
        BladePreset preset;
        if (parts[1] == "a")
            preset = BladePreset::a;
        else if (parts[1] == "b")
            preset = BladePreset::b;
        else if (parts[1] == "c")
            preset = BladePreset::c;
        else
            throw std::invalid_argument(usage);
        double height = 10.0;
        if (parts.size() == 3) {
            try {
                height = std::stod(parts[2]);
            } catch (const std::exception&) {
                throw std::invalid_argument(usage);
            }
        }
        return build_blade(preset, height);
    }
    throw std::invalid_argument(usage);
}

void write_json_file(const nlohmann::json& j, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << j.dump(2) << "\n";
}

int cmd_model(const RunConfig& cfg) {
    const OscillatorSystem sys = parse_geometry(cfg.geometry);
    const Eigen::MatrixXd h = assemble_dynamical_matrix(sys);
    const PaddedMatrix padded = pad_to_qubit_dimension(h);
    const EigenSystem eig = eigendecompose(h);
    const double lambda_mixed =
        padded.h.trace() / static_cast<double>(padded.h.rows());

    std::cout << "geometry: " << sys.label << "\n";
    std::cout << "oscillators: " << sys.n_oscillators() << "\n";
    std::cout << "qubits: " << padded.n_qubits << " (padded dimension "
              << padded.h.rows() << ")\n";
    if (eig.values.size() <= 16) {
        std::cout << "eigenvalues:";
        for (Eigen::Index i = 0; i < eig.values.size(); ++i)
            std::cout << ' ' << fmt(eig.values(i));
        std::cout << "\n";
    }
    std::cout << "lambda_min: " << fmt(eig.values(0)) << "\n";
    std::cout << "lambda_max: " << fmt(eig.values(eig.values.size() - 1)) << "\n";
    std::cout << "lambda_mixed: " << fmt(lambda_mixed) << "\n";
    std::cout << "omega_max: " << fmt(std::sqrt(eig.values(eig.values.size() - 1)))
              << "\n";

    const std::string base = cfg.out.empty() ? "model" : cfg.out;
    write_matrix_text(h, base + ".matrix.txt");
    write_geometry_json(sys, base + ".geometry.json");
    std::cout << "wrote: " << base << ".matrix.txt\n";
    std::cout << "wrote: " << base << ".geometry.json\n";
    return 0;
}

nlohmann::json estimate_to_json(const OscillatorSystem& sys, const PaddedMatrix& padded,
                                const EigenEstimate& est, const RunConfig& cfg) {
    nlohmann::json j;
    j["geometry"] = sys.label;
    j["n_osc"] = sys.n_oscillators();
    j["n_qubits"] = padded.n_qubits;
    j["k"] = est.k;
    j["lambda_exact"] = est.lambda_exact;
    j["lambda_est"] = est.lambda_est;
    j["omega_est"] = est.omega_est;
    j["omega_clamped"] = est.omega_clamped;
    j["lambda_mixed"] = est.lambda_mixed;
    j["eps_lambda"] = est.eps_lambda;
    j["delta_lambda"] = est.delta_lambda;
    j["rel_error"] = est.rel_error;  // serialized as null when undefined
    j["gate_count"] = est.gate_count;
    j["total_terms"] = est.total_terms;
    j["shots"] = est.shots_per_term;
    j["noise_f"] = cfg.noise_f;
    j["seed"] = cfg.seed;
    return j;
}

int cmd_estimate(const RunConfig& cfg) {
    const OscillatorSystem sys = parse_geometry(cfg.geometry);
    const PaddedMatrix padded = pad_to_qubit_dimension(assemble_dynamical_matrix(sys));
    const int k = cfg.k < 0 ? static_cast<int>(padded.h.rows()) - 1 : cfg.k;
    const int shots = parse_shots(cfg.shots_text);
    const NoiseModel noise = NoiseModel::depolarizing(cfg.noise_f);

    const EigenEstimate est =
        estimate_eigenvalue(padded.h, k, noise, shots, cfg.seed, 1e-12, cfg.jobs);

    std::cout << "geometry: " << sys.label << " (" << sys.n_oscillators()
              << " oscillators, " << padded.n_qubits << " qubits)\n";
    std::cout << "k: " << est.k
              << (k == static_cast<int>(padded.h.rows()) - 1 ? " (max eigenpair)" : "")
              << "\n";
    std::cout << "lambda_exact: " << fmt(est.lambda_exact) << "\n";
    std::cout << "lambda_est: " << fmt(est.lambda_est) << "\n";
    std::cout << "omega_est: " << fmt(est.omega_est)
              << (est.omega_clamped ? " (clamped: negative estimate)" : "") << "\n";
    std::cout << "lambda_mixed: " << fmt(est.lambda_mixed) << "\n";
    std::cout << "eps_lambda: " << fmt(est.eps_lambda) << "\n";
    std::cout << "delta_lambda: " << fmt(est.delta_lambda) << "\n";
    std::cout << "rel_error: " << fmt(est.rel_error) << "\n";
    std::cout << "gate_count: " << est.gate_count << "\n";
    std::cout << "total_terms: " << est.total_terms << "\n";
    std::cout << "shots: " << (shots == 0 ? std::string("analytic") : std::to_string(shots))
              << "\n";
    std::cout << "noise_f: " << fmt(cfg.noise_f) << "\n";
    std::cout << "seed: " << cfg.seed << "\n";

    if (!cfg.out.empty()) {
        write_json_file(estimate_to_json(sys, padded, est, cfg), cfg.out);
        std::cout << "wrote: " << cfg.out << "\n";
    }
    return 0;
}

int cmd_sweep(const RunConfig& cfg) {
    std::vector<OscillatorSystem> geoms;
    if (cfg.geometries.empty()) {
        geoms = standard_ladder();
    } else {
        for (const std::string& sel : cfg.geometries) geoms.push_back(parse_geometry(sel));
    }

    SweepOptions opt;
    opt.noise = NoiseModel::depolarizing(cfg.noise_f);
    opt.shots = parse_shots(cfg.shots_text);
    opt.repetitions = cfg.repetitions;
    opt.seed = cfg.seed;
    opt.jobs = cfg.jobs;
    const auto rows = sweep(geoms, opt);

    if (cfg.format != "csv" && cfg.format != "json")
        throw std::invalid_argument("format must be csv or json");
    const std::string path = cfg.out.empty() ? "sweep." + cfg.format : cfg.out;
    if (cfg.format == "csv")
        write_sweep_csv(rows, path);
    else
        write_sweep_json(rows, path);
    std::cout << "wrote: " << path << " (" << rows.size() << " rows)\n";
    return 0;
}

int cmd_assess(const RunConfig& cfg) {
    const auto registry =
        load_device_registry(cfg.registry.empty() ? default_registry_path() : cfg.registry);
    const DeviceSpec* device = find_device(registry, cfg.device);
    if (!device) {
        std::string known;
        for (const auto& d : registry) {
            if (!known.empty()) known += ", ";
            known += d.name;
        }
        throw std::runtime_error("unknown device '" + cfg.device +
                                 "'; known devices: " + known);
    }

    if (cfg.geometry.empty())
        throw std::invalid_argument("assess needs --from-geometry");
    const OscillatorSystem sys = parse_geometry(cfg.geometry);
    ProblemProfile profile =
        profile_from_matrix(assemble_dynamical_matrix(sys), cfg.n_steps);
    profile.embarrassingly_parallel = cfg.parallel_flagged;

    AssessmentConfig config;
    config.thresholds.min_system_size = cfg.threshold_system_size;
    config.thresholds.min_steps = cfg.threshold_steps;
    config.fidelity_floor = cfg.fidelity_floor;

    const AssessmentReport report = run_gate(profile, *device, config);

    auto reasons = [](const std::vector<std::string>& r) {
        std::string s;
        for (const auto& item : r) {
            if (!s.empty()) s += "; ";
            s += item;
        }
        return s;
    };
    std::cout << "device: " << device->name << " (" << device->qubits << " qubits)\n";
    std::cout << "workload: " << sys.label << ", " << profile.n_steps << " steps, "
              << profile.required_qubits << " qubits, " << profile.encoding_gate_count
              << " encoding gates\n";
    std::cout << "suitable: " << (report.suitability.suitable ? "yes" : "no") << " ("
              << reasons(report.suitability.reasons) << ")\n";
    if (report.classical_alternative)
        std::cout << "classical alternative preferred: "
                  << (report.classical_alternative->preferred ? "yes" : "no") << " ("
                  << reasons(report.classical_alternative->reasons) << ")\n";
    else
        std::cout << "classical alternative preferred: not evaluated\n";
    if (report.feasibility)
        std::cout << "feasible: " << (report.feasibility->feasible ? "yes" : "no") << " ("
                  << reasons(report.feasibility->reasons) << "; gate budget "
                  << report.feasibility->gate_budget << ")\n";
    else
        std::cout << "feasible: not evaluated\n";

    if (!cfg.out.empty()) {
        write_json_file(report_to_json(report), cfg.out);
        std::cout << "wrote: " << cfg.out << "\n";
    }
    return 0;
}

int dispatch(const RunConfig& cfg) {
    if (cfg.subcommand == "model") return cmd_model(cfg);
    if (cfg.subcommand == "estimate") return cmd_estimate(cfg);
    if (cfg.subcommand == "sweep") return cmd_sweep(cfg);
    if (cfg.subcommand == "assess") return cmd_assess(cfg);
    throw std::invalid_argument("unknown subcommand '" + cfg.subcommand +
                                "'; expected model, estimate, sweep or assess");
}

RunConfig config_from_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("config file: ") + e.what());
    }

    RunConfig cfg;
    cfg.seed = default_seed();
    if (!j.contains("subcommand") || !j["subcommand"].is_string())
        throw std::runtime_error("config file needs a string 'subcommand'");
    cfg.subcommand = j["subcommand"].get<std::string>();

    auto get = [&](const char* key, auto& slot) {
        if (j.contains(key) && !j[key].is_null())
            slot = j[key].get<std::decay_t<decltype(slot)>>();
    };
    get("geometry", cfg.geometry);
    get("geometries", cfg.geometries);
    get("noise", cfg.noise_f);
    if (j.contains("shots") && !j["shots"].is_null()) {
        if (j["shots"].is_string())
            cfg.shots_text = j["shots"].get<std::string>();
        else
            cfg.shots_text = std::to_string(j["shots"].get<long long>());
    }
    get("repetitions", cfg.repetitions);
    get("seed", cfg.seed);
    get("out", cfg.out);
    get("format", cfg.format);
    get("jobs", cfg.jobs);
    get("k", cfg.k);
    get("device", cfg.device);
    get("registry", cfg.registry);
    get("n_steps", cfg.n_steps);
    get("parallel", cfg.parallel_flagged);
    get("fidelity_floor", cfg.fidelity_floor);
    get("threshold_system_size", cfg.threshold_system_size);
    get("threshold_steps", cfg.threshold_steps);
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    std::string config_path;

    CLI::App app{"coupled-oscillator modal analysis on a simulated NISQ estimator"};
    app.require_subcommand(0, 1);
    app.add_option("--config", config_path,
                   "JSON file holding a full run configuration (replaces a subcommand)");

    try {
        cfg.seed = default_seed();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed,
                        "RNG seed (falls back to NISQ_MODAL_SEED, then 1234)");
        sub->add_option("--jobs", cfg.jobs, "worker threads; 0 = hardware concurrency");
        sub->add_option("-o,--out", cfg.out, "output path");
    };

    CLI::App* model = app.add_subcommand("model", "export a geometry and its matrix");
    model->add_option("geometry", cfg.geometry,
                      "chain:N[:fixed_fixed|fixed_free] or blade:a|b|c[:height_mm]")
        ->required();
    add_common(model);

    CLI::App* estimate =
        app.add_subcommand("estimate", "estimate one eigenvalue through the hybrid routine");
    estimate->add_option("geometry", cfg.geometry, "geometry selector")->required();
    estimate->add_option("--noise", cfg.noise_f, "per-gate fidelity f in (0, 1]")
        ->capture_default_str();
    estimate->add_option("--shots", cfg.shots_text, "shots per Pauli term, or 'analytic'")
        ->capture_default_str();
    estimate->add_option("--k", cfg.k, "eigenpair index (default: maximum)");
    add_common(estimate);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep geometries, write CSV/JSON");
    sweep_cmd
        ->add_option("--geometries", cfg.geometries,
                     "comma-separated selectors (default: chains 2-64 and blades a/b/c)")
        ->delimiter(',');
    sweep_cmd->add_option("--noise", cfg.noise_f, "per-gate fidelity f in (0, 1]")
        ->capture_default_str();
    sweep_cmd->add_option("--shots", cfg.shots_text, "shots per Pauli term, or 'analytic'")
        ->capture_default_str();
    sweep_cmd->add_option("--repetitions", cfg.repetitions, "repetitions per geometry")
        ->capture_default_str();
    sweep_cmd->add_option("--format", cfg.format, "csv or json")->capture_default_str();
    add_common(sweep_cmd);

    CLI::App* assess = app.add_subcommand("assess", "run the suitability/feasibility gate");
    assess->add_option("--device", cfg.device, "device name from the registry")->required();
    assess->add_option("--from-geometry", cfg.geometry, "geometry selector for the workload")
        ->required();
    assess->add_option("--n-steps", cfg.n_steps,
                       "how many solves the enclosing simulation performs")
        ->capture_default_str();
    assess->add_flag("--parallel", cfg.parallel_flagged,
                     "declare the workload embarrassingly parallel");
    assess->add_option("--fidelity-floor", cfg.fidelity_floor,
                       "circuit fidelity floor defining the gate budget")
        ->capture_default_str();
    assess->add_option("--threshold-system-size", cfg.threshold_system_size,
                       "suitability threshold on the system size")
        ->capture_default_str();
    assess->add_option("--threshold-steps", cfg.threshold_steps,
                       "suitability threshold on the step count")
        ->capture_default_str();
    assess->add_option("--registry", cfg.registry, "alternative device registry JSON");
    add_common(assess);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (!config_path.empty()) {
            if (!app.get_subcommands().empty())
                throw std::invalid_argument(
                    "--config replaces the subcommand; use one or the other");
            return dispatch(config_from_json(config_path));
        }
        const auto subs = app.get_subcommands();
        if (subs.empty()) {
            std::cerr << app.help();
            return 1;
        }
        cfg.subcommand = subs.front()->get_name();
        return dispatch(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
