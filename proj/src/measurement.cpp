#include "nisqmodal/measurement.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace nisqmodal {

NoiseModel NoiseModel::depolarizing(double gate_fidelity) {
    if (!(gate_fidelity > 0.0 && gate_fidelity <= 1.0))
        throw std::invalid_argument("noise model: gate fidelity must lie in (0, 1]");
    return {NoiseMode::global_depolarizing, gate_fidelity};
}

Circuit measurement_basis_change(const PauliString& p) {
    Circuit c;
    c.n_qubits = p.n_qubits;
    for (int q = 0; q < p.n_qubits; ++q) {
        const bool x = (p.x_mask >> q) & 1;
        const bool z = (p.z_mask >> q) & 1;
        if (x && z) {  // Y
            append_sdg(c, q);
            append_had(c, q);
        } else if (x) {
            append_had(c, q);
        }
    }
    return c;
}

double expectation_analytic(const Statevector& s, const PauliString& p) {
    if (p.n_qubits != s.n_qubits)
        throw std::invalid_argument("expectation_analytic: qubit counts differ");
    const auto& a = s.amplitudes;
    std::complex<double> acc = 0.0;
    for (std::uint64_t r = 0; r < static_cast<std::uint64_t>(a.size()); ++r) {
        const RowAction act = pauli_row_action(p, r);
        acc += std::conj(a(static_cast<Eigen::Index>(act.col))) * act.phase *
               a(static_cast<Eigen::Index>(r));
    }
    return acc.real();
}

ExpectationEstimate expectation_sampled(const Statevector& s, const PauliString& p,
                                        int shots, std::uint64_t seed) {
    if (shots < 1)
        throw std::invalid_argument("expectation_sampled: shots must be >= 1");
    const Statevector rotated = apply_circuit(measurement_basis_change(p), s);

    const Eigen::Index size = rotated.amplitudes.size();
    std::vector<double> cumulative(static_cast<std::size_t>(size));
    double running = 0.0;
    for (Eigen::Index i = 0; i < size; ++i) {
        running += std::norm(rotated.amplitudes(i));
        cumulative[static_cast<std::size_t>(i)] = running;
    }

    const std::uint64_t support = p.support_mask();
    std::mt19937_64 rng(seed);
    long long plus = 0;
    for (int shot = 0; shot < shots; ++shot) {
        // 53 uniform bits in [0, 1); independent of any library-defined
        // distribution so that seeded runs reproduce everywhere.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * running;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::uint64_t outcome = static_cast<std::uint64_t>(
            std::min<std::ptrdiff_t>(it - cumulative.begin(), size - 1));
        if ((std::popcount(outcome & support) & 1) == 0) ++plus;
    }

    ExpectationEstimate est;
    est.shots = shots;
    const long long minus = shots - plus;
    est.value = static_cast<double>(plus - minus) / static_cast<double>(shots);
    if (shots > 1) {
        const double d_plus = 1.0 - est.value;
        const double d_minus = -1.0 - est.value;
        const double ssq = static_cast<double>(plus) * d_plus * d_plus +
                           static_cast<double>(minus) * d_minus * d_minus;
        est.std_error = std::sqrt(ssq / static_cast<double>(shots - 1)) /
                        std::sqrt(static_cast<double>(shots));
    }
    return est;
}

double apply_global_depolarizing(double e_ideal, const PauliString& p,
                                 const NoiseModel& noise, long long gate_count) {
    if (std::abs(e_ideal) > 1.0 + 1e-9)
        throw std::invalid_argument("apply_global_depolarizing: |e_ideal| must be <= 1");
    if (gate_count < 0)
        throw std::invalid_argument("apply_global_depolarizing: gate_count must be >= 0");
    if (noise.mode == NoiseMode::noiseless || p.is_identity() ||
        noise.gate_fidelity == 1.0)
        return e_ideal;
    return e_ideal * std::pow(noise.gate_fidelity, static_cast<double>(gate_count));
}

}  // namespace nisqmodal
