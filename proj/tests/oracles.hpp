#pragma once

// Test-only dense oracles. Everything here goes through explicit Kronecker
// products and dense matrix algebra so the packed bit-mask kernels under
// test are checked against an independent route.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace oracles {

inline Eigen::Matrix2cd pauli_matrix_1q(char symbol) {
    using C = std::complex<double>;
    Eigen::Matrix2cd m;
    switch (symbol) {
        case 'I': m << 1, 0, 0, 1; break;
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << C(0, 0), C(0, -1), C(0, 1), C(0, 0); break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: throw std::invalid_argument("pauli_matrix_1q: bad symbol");
    }
    return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < a.cols(); ++c)
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    return out;
}

// Dense matrix of a Pauli label (qubit 0 leftmost in the label, least
// significant amplitude bit): kron runs from qubit n-1 down to qubit 0.
inline Eigen::MatrixXcd dense_pauli(const std::string& label) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (int q = static_cast<int>(label.size()) - 1; q >= 0; --q)
        m = kron(m, pauli_matrix_1q(label[static_cast<std::size_t>(q)]));
    return m;
}

inline Eigen::Matrix2cd ry_matrix(double angle) {
    Eigen::Matrix2cd m;
    m << std::cos(0.5 * angle), -std::sin(0.5 * angle),
         std::sin(0.5 * angle),  std::cos(0.5 * angle);
    return m;
}

inline Eigen::Matrix2cd rz_matrix(double angle) {
    using C = std::complex<double>;
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = std::exp(C(0, -0.5 * angle));
    m(1, 1) = std::exp(C(0, 0.5 * angle));
    return m;
}

inline Eigen::Matrix2cd hadamard_matrix() {
    Eigen::Matrix2cd m;
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return m;
}

inline Eigen::Matrix2cd sdg_matrix() {
    using C = std::complex<double>;
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = 1.0;
    m(1, 1) = C(0, -1);
    return m;
}

inline Eigen::MatrixXcd embed_single_qubit(const Eigen::Matrix2cd& u, int target,
                                           int n_qubits) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (int q = n_qubits - 1; q >= 0; --q)
        m = kron(m, q == target ? Eigen::MatrixXcd(u)
                                : Eigen::MatrixXcd(Eigen::Matrix2cd::Identity()));
    return m;
}

inline Eigen::MatrixXcd dense_cnot(int control, int target, int n_qubits) {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index in = 0; in < dim; ++in) {
        const Eigen::Index out =
            ((in >> control) & 1) ? (in ^ (Eigen::Index{1} << target)) : in;
        m(out, in) = 1.0;
    }
    return m;
}

// Analytic fixed-fixed unit chain spectrum, k = 1..n.
inline double chain_eigenvalue(int n, int k) {
    const double s = std::sin(k * M_PI / (2.0 * (n + 1)));
    return 4.0 * s * s;
}

// Portable uniforms/gaussians built directly on mt19937_64 output, so
// frozen test values do not depend on library distribution internals.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double gaussian(std::mt19937_64& rng) {
    double u1 = uniform01(rng);
    while (u1 <= 1e-300) u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

inline Eigen::MatrixXd random_symmetric(int dim, std::mt19937_64& rng) {
    Eigen::MatrixXd a(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) a(r, c) = 2.0 * uniform01(rng) - 1.0;
    return 0.5 * (a + a.transpose());
}

inline Eigen::VectorXd random_unit_vector(int dim, std::mt19937_64& rng) {
    Eigen::VectorXd v(dim);
    for (;;) {
        for (int i = 0; i < dim; ++i) v(i) = gaussian(rng);
        const double norm = v.norm();
        if (norm > 1e-6) return v / norm;
    }
}

}  // namespace oracles
