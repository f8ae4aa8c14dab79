#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace nisqmodal {

enum class GateKind { ry, rz, cnot, had, sdg };

struct Gate {
    GateKind kind = GateKind::ry;
    int target = 0;
    int control = -1;    // cnot only
    double angle = 0.0;  // ry / rz only, radians
};

struct Circuit {
    int n_qubits = 0;
    std::vector<Gate> gates;
};

std::string gate_name(GateKind kind);

// Append helpers validate qubit indices (and control != target for cnot).
void append_ry(Circuit& c, int target, double angle);
void append_rz(Circuit& c, int target, double angle);
void append_cnot(Circuit& c, int control, int target);
void append_had(Circuit& c, int target);
void append_sdg(Circuit& c, int target);

// Elementary gate count. Circuits produced by the synthesis routines have
// zero-angle rotations already elided, so this is just the list length.
long long gate_count(const Circuit& c);

// Rotation gates (ry/rz) only; the component that scales as O(N) with the
// encoded vector length.
long long rotation_count(const Circuit& c);

// JSON list of {"gate": name, "qubits": [...], "angle"?: radians}.
nlohmann::json circuit_to_json(const Circuit& c);

}  // namespace nisqmodal
