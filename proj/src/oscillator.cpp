#include "nisqmodal/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <stdexcept>
#include <utility>

namespace nisqmodal {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void validate(const OscillatorSystem& sys) {
    const int n = sys.n_oscillators();
    if (n < 1) throw std::invalid_argument("oscillator system: needs at least one node");
    for (int i = 0; i < n; ++i) {
        if (!(sys.masses[static_cast<std::size_t>(i)] > 0.0))
            throw std::invalid_argument("oscillator system: mass of node " +
                                        std::to_string(i) + " must be > 0");
    }
    std::set<std::pair<int, int>> seen;
    for (const Spring& s : sys.springs) {
        if (s.node_i < 0 || s.node_i >= n || s.node_j < 0 || s.node_j >= n)
            throw std::invalid_argument("oscillator system: spring endpoint out of range");
        if (s.node_i == s.node_j)
            throw std::invalid_argument("oscillator system: spring may not connect a node to itself");
        if (!(s.stiffness > 0.0))
            throw std::invalid_argument("oscillator system: spring stiffness must be > 0");
        auto key = std::minmax(s.node_i, s.node_j);
        if (!seen.insert(key).second)
            throw std::invalid_argument("oscillator system: duplicate spring between nodes " +
                                        std::to_string(key.first) + " and " +
                                        std::to_string(key.second));
    }
    std::set<int> grounded;
    for (const GroundSpring& g : sys.ground_springs) {
        if (g.node < 0 || g.node >= n)
            throw std::invalid_argument("oscillator system: ground spring node out of range");
        if (!(g.stiffness > 0.0))
            throw std::invalid_argument("oscillator system: ground spring stiffness must be > 0");
        if (!grounded.insert(g.node).second)
            throw std::invalid_argument("oscillator system: duplicate ground spring on node " +
                                        std::to_string(g.node));
    }
}

OscillatorSystem build_chain(int n_osc, double stiffness, double mass,
                             ChainBoundary boundary) {
    if (n_osc < 2)
        throw std::invalid_argument("build_chain: n_osc must be >= 2");
    if (!(stiffness > 0.0))
        throw std::invalid_argument("build_chain: stiffness must be > 0");
    if (!(mass > 0.0))
        throw std::invalid_argument("build_chain: mass must be > 0");

    OscillatorSystem sys;
    sys.masses.assign(static_cast<std::size_t>(n_osc), mass);
    for (int i = 0; i + 1 < n_osc; ++i)
        sys.springs.push_back({i, i + 1, stiffness});
    sys.ground_springs.push_back({0, stiffness});
    if (boundary == ChainBoundary::fixed_fixed)
        sys.ground_springs.push_back({n_osc - 1, stiffness});

    char label[48];
    std::snprintf(label, sizeof(label), "chain-%03d%s", n_osc,
                  boundary == ChainBoundary::fixed_free ? "-free" : "");
    sys.label = label;
    validate(sys);
    return sys;
}

OscillatorSystem build_blade(BladePreset preset, double height_mm) {
    if (!(height_mm >= 10.0 && height_mm <= 60.0))
        throw std::out_of_range("build_blade: height_mm must lie in [10, 60]");

    const int cols = (preset == BladePreset::a) ? 3 : 4;
    const int rows = (preset == BladePreset::a) ? 4 : 6;

    // kappa / L stiffness rule. Vertical edges span height_mm / (rows - 1);
    // horizontal edges keep a fixed 10 mm pitch independent of height.
    const double kappa = 1.0;
    const double k_vert = kappa * static_cast<double>(rows - 1) / height_mm;
    const double k_horz = kappa / 10.0;

    OscillatorSystem sys;
    sys.masses.assign(static_cast<std::size_t>(cols * rows), 1.0);
    sys.height_mm = height_mm;

    auto node = [cols](int r, int c) { return r * cols + c; };
    auto vert_stiffness = [&](int c) {
        // Preset c tapers the blade: outer columns carry half the vertical
        // stiffness of the interior.
        bool outer = (c == 0 || c == cols - 1);
        return (preset == BladePreset::c && outer) ? 0.5 * k_vert : k_vert;
    };

    for (int r = 0; r < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c)
            sys.springs.push_back({node(r, c), node(r, c + 1), k_horz});
    for (int r = 0; r + 1 < rows; ++r)
        for (int c = 0; c < cols; ++c)
            sys.springs.push_back({node(r, c), node(r + 1, c), vert_stiffness(c)});
    // Root row (r = 0) is the fixed boundary.
    for (int c = 0; c < cols; ++c)
        sys.ground_springs.push_back({node(0, c), vert_stiffness(c)});

    char label[48];
    std::snprintf(label, sizeof(label), "blade-%c-h%g",
                  preset == BladePreset::a ? 'a' : (preset == BladePreset::b ? 'b' : 'c'),
                  height_mm);
    sys.label = label;
    validate(sys);
    return sys;
}

Eigen::MatrixXd assemble_dynamical_matrix(const OscillatorSystem& sys) {
    validate(sys);
    const int n = sys.n_oscillators();
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
    for (const Spring& s : sys.springs) {
        k(s.node_i, s.node_i) += s.stiffness;
        k(s.node_j, s.node_j) += s.stiffness;
        k(s.node_i, s.node_j) -= s.stiffness;
        k(s.node_j, s.node_i) -= s.stiffness;
    }
    for (const GroundSpring& g : sys.ground_springs)
        k(g.node, g.node) += g.stiffness;

    Eigen::VectorXd inv_sqrt_m(n);
    for (int i = 0; i < n; ++i)
        inv_sqrt_m(i) = 1.0 / std::sqrt(sys.masses[static_cast<std::size_t>(i)]);
    return inv_sqrt_m.asDiagonal() * k * inv_sqrt_m.asDiagonal();
}

int qubits_for_dimension(Eigen::Index dim) {
    if (dim < 1)
        throw std::invalid_argument("qubits_for_dimension: dimension must be >= 1");
    int n = 1;
    while ((Eigen::Index{1} << n) < dim) ++n;
    return n;
}

PaddedMatrix pad_to_qubit_dimension(const Eigen::Ref<const Eigen::MatrixXd>& h) {
    if (h.rows() != h.cols())
        throw std::invalid_argument("pad_to_qubit_dimension: matrix must be square");
    const int n_qubits = qubits_for_dimension(h.rows());
    const Eigen::Index padded = Eigen::Index{1} << n_qubits;
    PaddedMatrix out;
    out.n_qubits = n_qubits;
    out.h = Eigen::MatrixXd::Zero(padded, padded);
    out.h.topLeftCorner(h.rows(), h.cols()) = h;
    return out;
}

std::string matrix_to_text(const Eigen::Ref<const Eigen::MatrixXd>& m) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c > 0) out += ' ';
            out += fmt(m(r, c));
        }
        out += '\n';
    }
    return out;
}

void write_matrix_text(const Eigen::Ref<const Eigen::MatrixXd>& m,
                       const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("write_matrix_text: cannot open " + path);
    f << matrix_to_text(m);
}

nlohmann::json geometry_to_json(const OscillatorSystem& sys) {
    nlohmann::json j;
    j["label"] = sys.label;
    j["n_oscillators"] = sys.n_oscillators();
    if (sys.height_mm)
        j["height_mm"] = *sys.height_mm;
    else
        j["height_mm"] = nullptr;
    j["nodes"] = nlohmann::json::array();
    for (int i = 0; i < sys.n_oscillators(); ++i)
        j["nodes"].push_back({{"index", i}, {"mass", sys.masses[static_cast<std::size_t>(i)]}});
    j["springs"] = nlohmann::json::array();
    for (const Spring& s : sys.springs)
        j["springs"].push_back({{"node_i", s.node_i}, {"node_j", s.node_j},
                                {"stiffness", s.stiffness}});
    j["ground_springs"] = nlohmann::json::array();
    for (const GroundSpring& g : sys.ground_springs)
        j["ground_springs"].push_back({{"node", g.node}, {"stiffness", g.stiffness}});
    return j;
}

void write_geometry_json(const OscillatorSystem& sys, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("write_geometry_json: cannot open " + path);
    f << geometry_to_json(sys).dump(2) << "\n";
}

}  // namespace nisqmodal
