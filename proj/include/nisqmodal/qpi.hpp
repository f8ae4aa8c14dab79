#pragma once

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace nisqmodal {

// One row of the bundled device table. Cells the table leaves blank stay
// absent; eplg_100q is the error-per-layered-gate fraction measured on a
// 100-qubit chain.
struct DeviceSpec {
    std::string name;
    int qubits = 0;
    std::optional<int> qv;
    std::optional<int> clops_v;  // ops/s
    std::optional<int> clops_h;  // ops/s
    std::optional<double> eplg_100q;
};

// EPLG = 1 - layer_fidelity^(1/n_2q) with n_2q two-qubit gates per layered
// chain (n_2q = N - 1 for a linear chain of N qubits).
double eplg_from_layer_fidelity(double layer_fidelity, int n_two_qubit);
// Inverse: layer_fidelity = (1 - eplg)^n_2q.
double layer_fidelity_from_eplg(double eplg, int n_two_qubit);

std::string default_registry_path();
std::vector<DeviceSpec> load_device_registry(const std::string& path = default_registry_path());
// nullptr when the name is unknown.
const DeviceSpec* find_device(const std::vector<DeviceSpec>& registry,
                              const std::string& name);

// Informational preconditions of the HHL linear-system algorithm for a
// candidate matrix; the algorithm itself lives outside this toolkit.
struct HhlChecklist {
    bool hermitian = false;
    bool power_of_two_dim = false;
    Eigen::Index dim = 0;
};
HhlChecklist check_hhl_requirements(const Eigen::Ref<const Eigen::MatrixXd>& a,
                                    double tol = 1e-10);

// Quantum phase estimation resource count for m phase bits: m ancilla
// qubits and 2^m - 1 controlled executions of U.
struct QpeCost {
    int ancilla_qubits = 0;
    long long u_executions = 0;
};
QpeCost qpe_cost(int m);

// Workload description fed to the assessment gate. embarrassingly_parallel
// is a declared property of the workload, not something inferred here.
struct ProblemProfile {
    long long system_size = 1;  // N, linear-system dimension
    long long n_steps = 1;      // how often the solve recurs in the simulation
    bool matrix_hermitian = true;
    int required_qubits = 1;    // ceil(log2 N) when derived from a matrix
    long long encoding_gate_count = 1;
    bool embarrassingly_parallel = false;
};

// Builds a profile from a padded dynamical matrix: system size, qubit needs
// and the gate cost of encoding the maximum eigenvector.
ProblemProfile profile_from_matrix(const Eigen::Ref<const Eigen::MatrixXd>& h,
                                   long long n_steps);

struct SuitabilityThresholds {
    long long min_system_size = 1 << 10;
    long long min_steps = 1000000;
};

struct SuitabilityResult {
    bool suitable = false;
    std::vector<std::string> reasons;
};

// A workload is worth targeting when either indicator clears its threshold:
// system size (classical solves scale at least O(N^3)) or step count
// (recurring solves at the millions-of-runs scale).
SuitabilityResult assess_suitability(const ProblemProfile& profile,
                                     const SuitabilityThresholds& thresholds = {});

struct InsufficientDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FeasibilityResult {
    bool feasible = false;
    long long gate_budget = 0;
    std::vector<std::string> reasons;
};

// Feasible iff the device has enough qubits and the encoding fits the gate
// budget floor(ln(fidelity_floor) / ln(1 - eplg)): the depth at which the
// estimated circuit fidelity (1 - eplg)^G drops to the floor. Throws
// InsufficientDataError when the qubit check passes but the device carries
// no error-rate figure.
FeasibilityResult assess_feasibility(const ProblemProfile& profile,
                                     const DeviceSpec& device,
                                     double fidelity_floor = 0.5);

struct ClassicalAlternativeResult {
    bool preferred = false;
    std::vector<std::string> reasons;
};

// Three-stage verdict. Later stages stay unevaluated (nullopt) once an
// earlier one fails, so feasible implies suitable and no preferred
// classical alternative.
struct AssessmentReport {
    SuitabilityResult suitability;
    std::optional<ClassicalAlternativeResult> classical_alternative;
    std::optional<FeasibilityResult> feasibility;
    DeviceSpec device;
};

struct AssessmentConfig {
    SuitabilityThresholds thresholds;
    double fidelity_floor = 0.5;
};

AssessmentReport run_gate(const ProblemProfile& profile, const DeviceSpec& device,
                          const AssessmentConfig& config = {});

nlohmann::json device_to_json(const DeviceSpec& d);
nlohmann::json report_to_json(const AssessmentReport& r);

}  // namespace nisqmodal
