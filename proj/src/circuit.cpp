#include "nisqmodal/circuit.hpp"

#include <stdexcept>

namespace nisqmodal {

namespace {

void check_qubit(const Circuit& c, int q, const char* what) {
    if (q < 0 || q >= c.n_qubits)
        throw std::invalid_argument(std::string(what) + " qubit index out of range");
}

}  // namespace

std::string gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::ry: return "ry";
        case GateKind::rz: return "rz";
        case GateKind::cnot: return "cnot";
        case GateKind::had: return "h";
        case GateKind::sdg: return "sdg";
    }
    throw std::logic_error("gate_name: unknown gate kind");
}

void append_ry(Circuit& c, int target, double angle) {
    check_qubit(c, target, "ry");
    c.gates.push_back({GateKind::ry, target, -1, angle});
}

void append_rz(Circuit& c, int target, double angle) {
    check_qubit(c, target, "rz");
    c.gates.push_back({GateKind::rz, target, -1, angle});
}

void append_cnot(Circuit& c, int control, int target) {
    check_qubit(c, control, "cnot control");
    check_qubit(c, target, "cnot target");
    if (control == target)
        throw std::invalid_argument("cnot: control and target must differ");
    c.gates.push_back({GateKind::cnot, target, control, 0.0});
}

void append_had(Circuit& c, int target) {
    check_qubit(c, target, "h");
    c.gates.push_back({GateKind::had, target, -1, 0.0});
}

void append_sdg(Circuit& c, int target) {
    check_qubit(c, target, "sdg");
    c.gates.push_back({GateKind::sdg, target, -1, 0.0});
}

long long gate_count(const Circuit& c) {
    return static_cast<long long>(c.gates.size());
}

long long rotation_count(const Circuit& c) {
    long long n = 0;
    for (const Gate& g : c.gates)
        if (g.kind == GateKind::ry || g.kind == GateKind::rz) ++n;
    return n;
}

nlohmann::json circuit_to_json(const Circuit& c) {
    nlohmann::json j = nlohmann::json::array();
    for (const Gate& g : c.gates) {
        nlohmann::json entry;
        entry["gate"] = gate_name(g.kind);
        if (g.kind == GateKind::cnot)
            entry["qubits"] = {g.control, g.target};
        else
            entry["qubits"] = {g.target};
        if (g.kind == GateKind::ry || g.kind == GateKind::rz)
            entry["angle"] = g.angle;
        j.push_back(entry);
    }
    return j;
}

}  // namespace nisqmodal
