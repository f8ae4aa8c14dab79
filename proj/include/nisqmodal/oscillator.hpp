#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace nisqmodal {

struct Spring {
    int node_i = 0;
    int node_j = 0;
    double stiffness = 0.0;  // N/m
};

struct GroundSpring {
    int node = 0;
    double stiffness = 0.0;  // N/m
};

// Scalar-displacement mass-spring network. Ground springs tie a node to a
// rigid wall and encode fixed boundary conditions; at least one must be
// present for the dynamical matrix to be positive definite.
struct OscillatorSystem {
    std::vector<double> masses;  // masses[i] is the mass of node i, kg
    std::vector<Spring> springs;
    std::vector<GroundSpring> ground_springs;
    std::string label;
    std::optional<double> height_mm;

    int n_oscillators() const { return static_cast<int>(masses.size()); }
};

// Throws std::invalid_argument when the system violates its invariants:
// at least one node, positive masses and stiffnesses, spring endpoints in
// range and distinct, unordered spring pairs unique, at most one ground
// spring per node.
void validate(const OscillatorSystem& sys);

enum class ChainBoundary { fixed_fixed, fixed_free };

// Linear chain of n_osc identical oscillators coupled by nearest-neighbour
// springs. fixed_fixed grounds both end nodes, fixed_free only node 0.
OscillatorSystem build_chain(int n_osc, double stiffness, double mass,
                             ChainBoundary boundary);

enum class BladePreset { a, b, c };

// Rectangular-grid blade stand-ins with the root row grounded:
//   a: 3 columns x 4 rows (12 oscillators)
//   b: 4 columns x 6 rows (24 oscillators)
//   c: as b, with vertical stiffness halved in the outer columns
// Vertical springs (and the root attachment) soften as kappa / L with
// L proportional to the blade height; horizontal springs keep a fixed
// edge length. Valid heights: 10 mm <= height_mm <= 60 mm.
OscillatorSystem build_blade(BladePreset preset, double height_mm);

// Mass-normalized stiffness matrix H = M^(-1/2) K M^(-1/2). K has the sum
// of incident stiffnesses (springs plus ground springs) on the diagonal and
// -stiffness(i,j) off diagonal. Eigenvalues of H are the squared angular
// resonance frequencies.
Eigen::MatrixXd assemble_dynamical_matrix(const OscillatorSystem& sys);

struct PaddedMatrix {
    Eigen::MatrixXd h;  // 2^n_qubits square
    int n_qubits = 0;
};

// Zero-embeds a square matrix into the top-left block of the smallest
// 2^n x 2^n frame with n >= 1. The nonzero spectrum is untouched and the
// padding contributes exactly 2^n - N zero eigenvalues.
PaddedMatrix pad_to_qubit_dimension(const Eigen::Ref<const Eigen::MatrixXd>& h);

// Number of qubits needed to index `dim` amplitudes: max(1, ceil(log2 dim)).
int qubits_for_dimension(Eigen::Index dim);

// Dense text export: first line "N N", then N whitespace-delimited rows.
std::string matrix_to_text(const Eigen::Ref<const Eigen::MatrixXd>& m);
void write_matrix_text(const Eigen::Ref<const Eigen::MatrixXd>& m,
                       const std::string& path);

nlohmann::json geometry_to_json(const OscillatorSystem& sys);
void write_geometry_json(const OscillatorSystem& sys, const std::string& path);

}  // namespace nisqmodal
