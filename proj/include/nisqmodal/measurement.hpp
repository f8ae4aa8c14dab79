#pragma once

#include <cstdint>

#include "nisqmodal/circuit.hpp"
#include "nisqmodal/pauli.hpp"
#include "nisqmodal/statevector.hpp"

namespace nisqmodal {

enum class NoiseMode { noiseless, global_depolarizing };

// Global depolarizing channel acting on expectation values: a circuit of G
// gates keeps a fraction f^G of every non-identity Pauli expectation and
// leaves the identity untouched, which interpolates an estimated eigenvalue
// between its exact value and the fully mixed value.
struct NoiseModel {
    NoiseMode mode = NoiseMode::noiseless;
    double gate_fidelity = 1.0;  // f in (0, 1]; noiseless forces 1

    static NoiseModel noiseless() { return {}; }
    static NoiseModel depolarizing(double gate_fidelity);
};

struct ExpectationEstimate {
    double value = 0.0;      // in [-1, 1]
    int shots = 0;           // 0 denotes the analytic (infinite-shot) limit
    double std_error = 0.0;  // sample std / sqrt(shots)
};

// Rotation into the measurement basis of P: h on X qubits, sdg then h on
// Y qubits, nothing on I and Z. Measuring the rotated state in the
// computational basis realizes a measurement of P.
Circuit measurement_basis_change(const PauliString& p);

// <s|P|s> computed through pauli_row_action in O(2^n); the imaginary
// residue (below 1e-10 for Hermitian strings) is discarded.
double expectation_analytic(const Statevector& s, const PauliString& p);

// Monte-Carlo estimate: rotates into the basis of P, draws `shots`
// bitstrings from |amplitude|^2 and scores each one by the parity of the
// measured bits on the support of P. Deterministic for a fixed seed.
ExpectationEstimate expectation_sampled(const Statevector& s, const PauliString& p,
                                        int shots, std::uint64_t seed);

// Applies the global depolarizing factor f^gate_count to a non-identity
// expectation; identity expectations pass through unchanged.
double apply_global_depolarizing(double e_ideal, const PauliString& p,
                                 const NoiseModel& noise, long long gate_count);

}  // namespace nisqmodal
