#pragma once

#include <Eigen/Dense>

#include <cstdint>

#include "nisqmodal/measurement.hpp"

namespace nisqmodal {

// Full spectrum of a real symmetric matrix: eigenvalues ascending,
// orthonormal eigenvectors as columns.
struct EigenSystem {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};

EigenSystem eigendecompose(const Eigen::Ref<const Eigen::MatrixXd>& h,
                           double symmetry_tol = 1e-10);

struct ErrorMetrics {
    double eps = 0.0;    // lambda_max - lambda_est
    double delta = 0.0;  // lambda_max - lambda_mixed
    double rel = 0.0;    // eps / delta
};

// Throws std::domain_error unless lambda_max > lambda_mixed (the metrics
// are defined for maximum-eigenvalue workflows only).
ErrorMetrics error_metrics(double lambda_max, double lambda_est, double lambda_mixed);

// sqrt(lambda); throws std::domain_error for negative input. Callers with
// noisy estimates clamp first.
double resonance_frequency(double lambda);

struct EigenEstimate {
    int k = 0;
    double lambda_exact = 0.0;
    double lambda_est = 0.0;
    double omega_est = 0.0;
    double lambda_mixed = 0.0;
    double eps_lambda = 0.0;
    double delta_lambda = 0.0;
    double rel_error = 0.0;  // NaN when delta_lambda <= 0
    long long gate_count = 0;
    int shots_per_term = 0;  // 0 = analytic
    int total_terms = 0;
    bool omega_clamped = false;  // noise pushed lambda_est below zero
};

// The hybrid estimation routine for eigenpair k of a padded 2^n x 2^n real
// symmetric matrix:
//   1. classical eigendecomposition,
//   2. Pauli decomposition of h (weights g_i),
//   3. amplitude-encoding of the eigenvector and per-term expectation
//      estimation (analytic when shots == 0, sampled otherwise; the sampling
//      seed of term i is seed + i), degraded by the noise model with the
//      encoding circuit's gate count,
//   4. weighted resum lambda_est = sum_i g_i * E_i.
// The identity term always contributes g_1 * 1. A negative lambda_est
// clamps omega_est to zero and raises omega_clamped instead of throwing, so
// sweeps survive statistical outliers.
EigenEstimate estimate_eigenvalue(const Eigen::Ref<const Eigen::MatrixXd>& h_padded,
                                  int k, const NoiseModel& noise, int shots,
                                  std::uint64_t seed, double prune_tol = 1e-12,
                                  int jobs = 1);

}  // namespace nisqmodal
