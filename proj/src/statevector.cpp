#include "nisqmodal/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace nisqmodal {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_state(int n_qubits, Eigen::Index size) {
    if (n_qubits < 1 || n_qubits > 28)
        throw std::invalid_argument("statevector: n_qubits out of range");
    if (size != (Eigen::Index{1} << n_qubits))
        throw std::invalid_argument("statevector: amplitude count must be 2^n_qubits");
}

}  // namespace

Statevector zero_state(int n_qubits) {
    if (n_qubits < 1 || n_qubits > 28)
        throw std::invalid_argument("statevector: n_qubits out of range");
    Statevector s;
    s.n_qubits = n_qubits;
    s.amplitudes = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
    s.amplitudes(0) = 1.0;
    return s;
}

Statevector make_statevector(int n_qubits, Eigen::VectorXcd amplitudes) {
    check_state(n_qubits, amplitudes.size());
    if (std::abs(amplitudes.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("statevector: amplitudes must have unit norm");
    return {n_qubits, std::move(amplitudes)};
}

void apply_gate_in_place(Statevector& s, const Gate& g) {
    auto& a = s.amplitudes;
    const std::uint64_t size = static_cast<std::uint64_t>(a.size());
    const std::uint64_t tbit = std::uint64_t{1} << g.target;
    if (g.target < 0 || g.target >= s.n_qubits)
        throw std::invalid_argument("apply_gate: target out of range");

    switch (g.kind) {
        case GateKind::ry: {
            const double c = std::cos(0.5 * g.angle);
            const double sn = std::sin(0.5 * g.angle);
            for (std::uint64_t base = 0; base < size; base += 2 * tbit)
                for (std::uint64_t i = base; i < base + tbit; ++i) {
                    const auto a0 = a(static_cast<Eigen::Index>(i));
                    const auto a1 = a(static_cast<Eigen::Index>(i | tbit));
                    a(static_cast<Eigen::Index>(i)) = c * a0 - sn * a1;
                    a(static_cast<Eigen::Index>(i | tbit)) = sn * a0 + c * a1;
                }
            break;
        }
        case GateKind::rz: {
            const std::complex<double> p0(std::cos(0.5 * g.angle), -std::sin(0.5 * g.angle));
            const std::complex<double> p1 = std::conj(p0);
            for (std::uint64_t base = 0; base < size; base += 2 * tbit)
                for (std::uint64_t i = base; i < base + tbit; ++i) {
                    a(static_cast<Eigen::Index>(i)) *= p0;
                    a(static_cast<Eigen::Index>(i | tbit)) *= p1;
                }
            break;
        }
        case GateKind::had: {
            for (std::uint64_t base = 0; base < size; base += 2 * tbit)
                for (std::uint64_t i = base; i < base + tbit; ++i) {
                    const auto a0 = a(static_cast<Eigen::Index>(i));
                    const auto a1 = a(static_cast<Eigen::Index>(i | tbit));
                    a(static_cast<Eigen::Index>(i)) = kInvSqrt2 * (a0 + a1);
                    a(static_cast<Eigen::Index>(i | tbit)) = kInvSqrt2 * (a0 - a1);
                }
            break;
        }
        case GateKind::sdg: {
            const std::complex<double> minus_i(0.0, -1.0);
            for (std::uint64_t base = 0; base < size; base += 2 * tbit)
                for (std::uint64_t i = base; i < base + tbit; ++i)
                    a(static_cast<Eigen::Index>(i | tbit)) *= minus_i;
            break;
        }
        case GateKind::cnot: {
            if (g.control < 0 || g.control >= s.n_qubits || g.control == g.target)
                throw std::invalid_argument("apply_gate: bad cnot control");
            const std::uint64_t cbit = std::uint64_t{1} << g.control;
            for (std::uint64_t i = 0; i < size; ++i)
                if ((i & cbit) && !(i & tbit))
                    std::swap(a(static_cast<Eigen::Index>(i)),
                              a(static_cast<Eigen::Index>(i | tbit)));
            break;
        }
    }
}

Statevector apply_circuit(const Circuit& c, const Statevector& s) {
    if (c.n_qubits != s.n_qubits)
        throw std::invalid_argument("apply_circuit: circuit and state qubit counts differ");
    Statevector out = s;
    for (const Gate& g : c.gates) apply_gate_in_place(out, g);
    return out;
}

}  // namespace nisqmodal
