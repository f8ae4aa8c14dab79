#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace nisqmodal {

// Tensor product of single-qubit Pauli operators in the symplectic mask
// encoding: qubit q carries X iff bit q of x_mask is set, Z iff bit q of
// z_mask is set, Y iff both, and I iff neither. The all-identity string is
// x_mask = z_mask = 0.
struct PauliString {
    int n_qubits = 0;
    std::uint64_t x_mask = 0;
    std::uint64_t z_mask = 0;

    bool is_identity() const { return x_mask == 0 && z_mask == 0; }
    std::uint64_t support_mask() const { return x_mask | z_mask; }
    int y_count() const;

    // "IXZY" with qubit 0 leftmost.
    std::string label() const;
    static PauliString from_label(const std::string& label);

    bool operator==(const PauliString&) const = default;
};

struct RowAction {
    std::uint64_t col = 0;
    std::complex<double> phase;  // one of +1, -1, +i, -i
};

// Action on a computational basis state: P|row> = phase * |col> with
// col = row ^ x_mask and
// phase = (-1)^popcount(row & z_mask) * i^popcount(x_mask & z_mask).
// Each Pauli string has exactly one nonzero entry per row, so this is all
// that is needed to form traces and expectation values in O(2^n).
RowAction pauli_row_action(const PauliString& p, std::uint64_t row);

struct PauliTerm {
    PauliString pauli;
    double weight = 0.0;
};

// Weighted Pauli-basis representation of a real symmetric matrix:
// H = sum_i weight_i * P_i. Terms are ordered identity first, then
// lexicographically by (x_mask, z_mask); the identity term is always
// present, even with zero weight.
struct PauliDecomposition {
    int n_qubits = 0;
    std::vector<PauliTerm> terms;
};

// Projects a real symmetric 2^n x 2^n matrix onto all 4^n Pauli strings,
// weight_i = tr(P_i H) / 2^n, and keeps terms with |weight| > prune_tol.
// Strings with an odd number of Y factors are purely imaginary matrices, so
// their real weight vanishes identically against a real symmetric H.
// Throws std::invalid_argument for a non-power-of-two dimension or an
// asymmetry beyond symmetry_tol (relative). `jobs` distributes the strings
// over worker threads; the output is identical for any value.
PauliDecomposition decompose(const Eigen::Ref<const Eigen::MatrixXd>& h,
                             double prune_tol = 1e-12,
                             double symmetry_tol = 1e-10, int jobs = 1);

// Dense sum_i weight_i * P_i. Complex in general; for decompositions of
// real symmetric matrices the imaginary parts stay below 1e-12.
Eigen::MatrixXcd reconstruct(const PauliDecomposition& d);

// Weight of the identity string, i.e. tr(H) / 2^n: the value a fully mixed
// (noise dominated) state reports for H, since every other Pauli expectation
// vanishes there.
double mixed_state_value(const PauliDecomposition& d);

// JSON array of {"pauli": "IXZY...", "weight": g} in term order.
nlohmann::json decomposition_to_json(const PauliDecomposition& d);

}  // namespace nisqmodal
