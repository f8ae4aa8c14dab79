#include "nisqmodal/estimator.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "nisqmodal/encoding.hpp"
#include "nisqmodal/parallel.hpp"

namespace nisqmodal {

EigenSystem eigendecompose(const Eigen::Ref<const Eigen::MatrixXd>& h,
                           double symmetry_tol) {
    if (h.rows() != h.cols())
        throw std::invalid_argument("eigendecompose: matrix must be square");
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    if ((h - h.transpose()).cwiseAbs().maxCoeff() > symmetry_tol * scale)
        throw std::invalid_argument("eigendecompose: matrix is not symmetric within tolerance");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecompose: eigensolver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

ErrorMetrics error_metrics(double lambda_max, double lambda_est, double lambda_mixed) {
    const double delta = lambda_max - lambda_mixed;
    if (!(delta > 0.0))
        throw std::domain_error("error_metrics: lambda_max must exceed lambda_mixed");
    const double eps = lambda_max - lambda_est;
    return {eps, delta, eps / delta};
}

double resonance_frequency(double lambda) {
    if (lambda < 0.0)
        throw std::domain_error("resonance_frequency: lambda must be >= 0");
    return std::sqrt(lambda);
}

EigenEstimate estimate_eigenvalue(const Eigen::Ref<const Eigen::MatrixXd>& h_padded,
                                  int k, const NoiseModel& noise, int shots,
                                  std::uint64_t seed, double prune_tol, int jobs) {
    if (shots < 0)
        throw std::invalid_argument("estimate_eigenvalue: shots must be >= 0 (0 = analytic)");

    const PauliDecomposition decomp = decompose(h_padded, prune_tol);
    const EigenSystem eig = eigendecompose(h_padded);
    if (k < 0 || k >= eig.values.size())
        throw std::invalid_argument("estimate_eigenvalue: eigenpair index out of range");

    const Eigen::VectorXd v = eig.vectors.col(k);
    const Circuit encoding = synthesize_encoding(v);
    const long long gates = gate_count(encoding);
    const Statevector prepared = apply_circuit(encoding, zero_state(encoding.n_qubits));

    // Every term owns its slot and (in sampled mode) its own seed, so the
    // result is independent of the worker count.
    std::vector<double> contributions(decomp.terms.size(), 0.0);
    parallel_for(decomp.terms.size(), jobs, [&](std::size_t i) {
        const PauliTerm& term = decomp.terms[i];
        double e_ideal;
        if (term.pauli.is_identity())
            e_ideal = 1.0;
        else if (shots == 0)
            e_ideal = expectation_analytic(prepared, term.pauli);
        else
            e_ideal = expectation_sampled(prepared, term.pauli, shots,
                                          seed + static_cast<std::uint64_t>(i))
                          .value;
        contributions[i] =
            term.weight * apply_global_depolarizing(e_ideal, term.pauli, noise, gates);
    });

    double lambda_est = 0.0;
    for (double c : contributions) lambda_est += c;

    EigenEstimate est;
    est.k = k;
    est.lambda_exact = eig.values(k);
    est.lambda_est = lambda_est;
    est.omega_clamped = lambda_est < 0.0;
    est.omega_est = est.omega_clamped ? 0.0 : std::sqrt(lambda_est);
    est.lambda_mixed = mixed_state_value(decomp);
    est.eps_lambda = est.lambda_exact - est.lambda_est;
    est.delta_lambda = est.lambda_exact - est.lambda_mixed;
    est.rel_error = est.delta_lambda > 0.0
                        ? error_metrics(est.lambda_exact, est.lambda_est, est.lambda_mixed).rel
                        : std::numeric_limits<double>::quiet_NaN();
    est.gate_count = gates;
    est.shots_per_term = shots;
    est.total_terms = static_cast<int>(decomp.terms.size());
    return est;
}

}  // namespace nisqmodal
