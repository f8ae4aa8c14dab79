#pragma once

#include <Eigen/Dense>

#include "nisqmodal/circuit.hpp"

namespace nisqmodal {

// 2^n complex amplitudes; amplitude index bit q is the state of qubit q
// (qubit 0 = least significant bit). Treated as immutable: apply_circuit
// returns a fresh state, so shared statevectors are safe to read
// concurrently.
struct Statevector {
    int n_qubits = 0;
    Eigen::VectorXcd amplitudes;
};

// |0...0>.
Statevector zero_state(int n_qubits);

// Wraps explicit amplitudes; throws unless the length is 2^n_qubits and the
// norm is 1 within 1e-10.
Statevector make_statevector(int n_qubits, Eigen::VectorXcd amplitudes);

void apply_gate_in_place(Statevector& s, const Gate& g);

// Applies the gates in list order. Throws std::invalid_argument when the
// qubit counts disagree. Unitary gates preserve the norm to rounding.
Statevector apply_circuit(const Circuit& c, const Statevector& s);

}  // namespace nisqmodal
