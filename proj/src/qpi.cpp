#include "nisqmodal/qpi.hpp"

#include <cmath>
#include <fstream>

#include "nisqmodal/encoding.hpp"
#include "nisqmodal/estimator.hpp"
#include "nisqmodal/oscillator.hpp"

#ifndef NISQMODAL_REGISTRY_FILE
#define NISQMODAL_REGISTRY_FILE "data/ibm_devices.json"
#endif

namespace nisqmodal {

double eplg_from_layer_fidelity(double layer_fidelity, int n_two_qubit) {
    if (!(layer_fidelity > 0.0 && layer_fidelity <= 1.0))
        throw std::domain_error("eplg_from_layer_fidelity: layer fidelity must lie in (0, 1]");
    if (n_two_qubit < 1)
        throw std::invalid_argument("eplg_from_layer_fidelity: n_two_qubit must be >= 1");
    return 1.0 - std::pow(layer_fidelity, 1.0 / static_cast<double>(n_two_qubit));
}

double layer_fidelity_from_eplg(double eplg, int n_two_qubit) {
    if (!(eplg >= 0.0 && eplg < 1.0))
        throw std::domain_error("layer_fidelity_from_eplg: eplg must lie in [0, 1)");
    if (n_two_qubit < 1)
        throw std::invalid_argument("layer_fidelity_from_eplg: n_two_qubit must be >= 1");
    return std::pow(1.0 - eplg, static_cast<double>(n_two_qubit));
}

std::string default_registry_path() {
    return NISQMODAL_REGISTRY_FILE;
}

namespace {

template <typename T>
std::optional<T> optional_field(const nlohmann::json& row, const char* key,
                                std::size_t index) {
    if (!row.contains(key) || row.at(key).is_null()) return std::nullopt;
    try {
        return row.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw std::runtime_error("device registry row " + std::to_string(index) +
                                 ": field '" + key + "' has the wrong type");
    }
}

}  // namespace

std::vector<DeviceSpec> load_device_registry(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("device registry: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("device registry: parse error: ") + e.what());
    }
    if (!j.is_array())
        throw std::runtime_error("device registry: top-level value must be an array");

    std::vector<DeviceSpec> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const nlohmann::json& row = j[i];
        if (!row.is_object() || !row.contains("name") || !row["name"].is_string() ||
            !row.contains("qubits") || !row["qubits"].is_number_integer())
            throw std::runtime_error("device registry row " + std::to_string(i) +
                                     ": needs a string 'name' and integer 'qubits'");
        DeviceSpec d;
        d.name = row["name"].get<std::string>();
        d.qubits = row["qubits"].get<int>();
        if (d.qubits <= 0)
            throw std::runtime_error("device registry row " + std::to_string(i) +
                                     ": qubits must be > 0");
        d.qv = optional_field<int>(row, "qv", i);
        d.clops_v = optional_field<int>(row, "clops_v", i);
        d.clops_h = optional_field<int>(row, "clops_h", i);
        d.eplg_100q = optional_field<double>(row, "eplg_100q", i);
        if (d.eplg_100q && !(*d.eplg_100q > 0.0 && *d.eplg_100q < 1.0))
            throw std::runtime_error("device registry row " + std::to_string(i) +
                                     ": eplg_100q must lie in (0, 1)");
        out.push_back(std::move(d));
    }
    return out;
}

const DeviceSpec* find_device(const std::vector<DeviceSpec>& registry,
                              const std::string& name) {
    for (const DeviceSpec& d : registry)
        if (d.name == name) return &d;
    return nullptr;
}

HhlChecklist check_hhl_requirements(const Eigen::Ref<const Eigen::MatrixXd>& a,
                                    double tol) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("check_hhl_requirements: matrix must be square");
    HhlChecklist c;
    c.dim = a.rows();
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    c.hermitian = (a - a.transpose()).cwiseAbs().maxCoeff() <= tol * scale;
    c.power_of_two_dim = c.dim >= 1 && (c.dim & (c.dim - 1)) == 0;
    return c;
}

QpeCost qpe_cost(int m) {
    if (m < 1)
        throw std::invalid_argument("qpe_cost: m must be >= 1");
    if (m > 62)
        throw std::invalid_argument("qpe_cost: m too large for a 64-bit count");
    return {m, (1LL << m) - 1};
}

ProblemProfile profile_from_matrix(const Eigen::Ref<const Eigen::MatrixXd>& h,
                                   long long n_steps) {
    const PaddedMatrix padded = pad_to_qubit_dimension(h);
    const EigenSystem eig = eigendecompose(padded.h);
    const Circuit encoding =
        synthesize_encoding(eig.vectors.col(eig.vectors.cols() - 1));

    ProblemProfile p;
    p.system_size = h.rows();
    p.n_steps = n_steps;
    p.matrix_hermitian = true;
    p.required_qubits = padded.n_qubits;
    p.encoding_gate_count = gate_count(encoding);
    return p;
}

SuitabilityResult assess_suitability(const ProblemProfile& profile,
                                     const SuitabilityThresholds& thresholds) {
    SuitabilityResult r;
    if (profile.system_size >= thresholds.min_system_size) {
        r.suitable = true;
        r.reasons.push_back("system size " + std::to_string(profile.system_size) +
                            " >= threshold " + std::to_string(thresholds.min_system_size));
    }
    if (profile.n_steps >= thresholds.min_steps) {
        r.suitable = true;
        r.reasons.push_back("step count " + std::to_string(profile.n_steps) +
                            " >= threshold " + std::to_string(thresholds.min_steps));
    }
    if (!r.suitable)
        r.reasons.push_back("system size " + std::to_string(profile.system_size) +
                            " and step count " + std::to_string(profile.n_steps) +
                            " both below thresholds");
    return r;
}

FeasibilityResult assess_feasibility(const ProblemProfile& profile,
                                     const DeviceSpec& device, double fidelity_floor) {
    if (!(fidelity_floor > 0.0 && fidelity_floor < 1.0))
        throw std::invalid_argument("assess_feasibility: fidelity_floor must lie in (0, 1)");

    FeasibilityResult r;
    if (profile.required_qubits > device.qubits) {
        r.feasible = false;
        r.reasons.push_back("needs " + std::to_string(profile.required_qubits) +
                            " qubits but " + device.name + " has " +
                            std::to_string(device.qubits));
        return r;
    }
    r.reasons.push_back("qubit check passed (" + std::to_string(profile.required_qubits) +
                        " <= " + std::to_string(device.qubits) + ")");

    if (!device.eplg_100q)
        throw InsufficientDataError("assess_feasibility: " + device.name +
                                    " carries no error-per-layered-gate figure");

    const double eplg = *device.eplg_100q;
    r.gate_budget = static_cast<long long>(
        std::floor(std::log(fidelity_floor) / std::log(1.0 - eplg)));
    if (profile.encoding_gate_count <= r.gate_budget) {
        r.feasible = true;
        r.reasons.push_back("encoding needs " + std::to_string(profile.encoding_gate_count) +
                            " gates within budget " + std::to_string(r.gate_budget));
    } else {
        r.feasible = false;
        r.reasons.push_back("encoding needs " + std::to_string(profile.encoding_gate_count) +
                            " gates but the budget is " + std::to_string(r.gate_budget));
    }
    return r;
}

AssessmentReport run_gate(const ProblemProfile& profile, const DeviceSpec& device,
                          const AssessmentConfig& config) {
    AssessmentReport report;
    report.device = device;
    report.suitability = assess_suitability(profile, config.thresholds);
    if (!report.suitability.suitable) return report;

    ClassicalAlternativeResult alt;
    alt.preferred = profile.embarrassingly_parallel;
    alt.reasons.push_back(profile.embarrassingly_parallel
                              ? "workload is declared embarrassingly parallel; "
                                "classical parallelization preferred"
                              : "no preferred classical alternative declared");
    report.classical_alternative = alt;
    if (alt.preferred) return report;

    report.feasibility = assess_feasibility(profile, device, config.fidelity_floor);
    return report;
}

nlohmann::json device_to_json(const DeviceSpec& d) {
    nlohmann::json j;
    j["name"] = d.name;
    j["qubits"] = d.qubits;
    j["qv"] = d.qv ? nlohmann::json(*d.qv) : nlohmann::json(nullptr);
    j["clops_v"] = d.clops_v ? nlohmann::json(*d.clops_v) : nlohmann::json(nullptr);
    j["clops_h"] = d.clops_h ? nlohmann::json(*d.clops_h) : nlohmann::json(nullptr);
    j["eplg_100q"] = d.eplg_100q ? nlohmann::json(*d.eplg_100q) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json report_to_json(const AssessmentReport& r) {
    nlohmann::json j;
    j["suitable"] = r.suitability.suitable;
    j["suitable_reasons"] = r.suitability.reasons;
    if (r.classical_alternative) {
        j["classical_alternative_preferred"] = r.classical_alternative->preferred;
        j["classical_alternative_reasons"] = r.classical_alternative->reasons;
    } else {
        j["classical_alternative_preferred"] = nullptr;
        j["classical_alternative_reasons"] = nlohmann::json::array();
    }
    if (r.feasibility) {
        j["feasible"] = r.feasibility->feasible;
        j["gate_budget"] = r.feasibility->gate_budget;
        j["feasible_reasons"] = r.feasibility->reasons;
    } else {
        j["feasible"] = nullptr;
        j["gate_budget"] = nullptr;
        j["feasible_reasons"] = nlohmann::json::array();
    }
    j["device"] = device_to_json(r.device);
    return j;
}

}  // namespace nisqmodal
