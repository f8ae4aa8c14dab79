#include "nisqmodal/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "nisqmodal/parallel.hpp"

namespace nisqmodal {

namespace {

constexpr std::complex<double> kQuarterPhases[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};  // i^0..i^3

void check_masks(const PauliString& p) {
    if (p.n_qubits < 1 || p.n_qubits > 62)
        throw std::invalid_argument("pauli string: n_qubits out of range");
    const std::uint64_t full = (std::uint64_t{1} << p.n_qubits) - 1;
    if ((p.x_mask & ~full) != 0 || (p.z_mask & ~full) != 0)
        throw std::invalid_argument("pauli string: mask exceeds n_qubits bits");
}

}  // namespace

int PauliString::y_count() const {
    return std::popcount(x_mask & z_mask);
}

std::string PauliString::label() const {
    check_masks(*this);
    std::string s(static_cast<std::size_t>(n_qubits), 'I');
    for (int q = 0; q < n_qubits; ++q) {
        bool x = (x_mask >> q) & 1;
        bool z = (z_mask >> q) & 1;
        if (x && z)
            s[static_cast<std::size_t>(q)] = 'Y';
        else if (x)
            s[static_cast<std::size_t>(q)] = 'X';
        else if (z)
            s[static_cast<std::size_t>(q)] = 'Z';
    }
    return s;
}

PauliString PauliString::from_label(const std::string& label) {
    if (label.empty())
        throw std::invalid_argument("pauli label: must not be empty");
    PauliString p;
    p.n_qubits = static_cast<int>(label.size());
    for (int q = 0; q < p.n_qubits; ++q) {
        switch (label[static_cast<std::size_t>(q)]) {
            case 'I': break;
            case 'X': p.x_mask |= std::uint64_t{1} << q; break;
            case 'Z': p.z_mask |= std::uint64_t{1} << q; break;
            case 'Y':
                p.x_mask |= std::uint64_t{1} << q;
                p.z_mask |= std::uint64_t{1} << q;
                break;
            default:
                throw std::invalid_argument("pauli label: invalid symbol '" +
                                            std::string(1, label[static_cast<std::size_t>(q)]) +
                                            "'");
        }
    }
    return p;
}

RowAction pauli_row_action(const PauliString& p, std::uint64_t row) {
    check_masks(p);
    if (row >> p.n_qubits)
        throw std::invalid_argument("pauli_row_action: row out of range");
    const int quarter =
        (std::popcount(p.x_mask & p.z_mask) + 2 * std::popcount(row & p.z_mask)) & 3;
    return {row ^ p.x_mask, kQuarterPhases[quarter]};
}

PauliDecomposition decompose(const Eigen::Ref<const Eigen::MatrixXd>& h,
                             double prune_tol, double symmetry_tol, int jobs) {
    const Eigen::Index dim = h.rows();
    if (dim < 2 || (dim & (dim - 1)) != 0)
        throw std::invalid_argument("decompose: dimension must be a power of two >= 2");
    if (h.cols() != dim)
        throw std::invalid_argument("decompose: matrix must be square");
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    if ((h - h.transpose()).cwiseAbs().maxCoeff() > symmetry_tol * scale)
        throw std::invalid_argument("decompose: matrix is not symmetric within tolerance");

    int n_qubits = 0;
    while ((Eigen::Index{1} << n_qubits) < dim) ++n_qubits;

    const std::uint64_t size = static_cast<std::uint64_t>(dim);
    const std::size_t total = static_cast<std::size_t>(size) * size;
    std::vector<double> weights(total, 0.0);

    parallel_for(total, jobs, [&](std::size_t t) {
        const std::uint64_t x = static_cast<std::uint64_t>(t) / size;
        const std::uint64_t z = static_cast<std::uint64_t>(t) % size;
        // i^y_count is imaginary for odd Y counts, so the (real) weight is
        // exactly zero there; only the +/-1 cases need the trace sum.
        const int quarter = std::popcount(x & z) & 3;
        if (quarter & 1) return;
        const double base = (quarter == 0) ? 1.0 : -1.0;
        double sum = 0.0;
        for (std::uint64_t r = 0; r < size; ++r) {
            const std::uint64_t s = r ^ x;
            const double sign = (std::popcount(z & s) & 1) ? -1.0 : 1.0;
            sum += sign * h(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(r));
        }
        weights[t] = base * sum / static_cast<double>(size);
    });

    PauliDecomposition d;
    d.n_qubits = n_qubits;
    d.terms.push_back({PauliString{n_qubits, 0, 0}, weights[0]});
    for (std::size_t t = 1; t < total; ++t) {
        const double w = weights[t];
        if (!std::isfinite(w))
            throw std::runtime_error("decompose: non-finite weight encountered");
        if (std::abs(w) > prune_tol) {
            const std::uint64_t x = static_cast<std::uint64_t>(t) / size;
            const std::uint64_t z = static_cast<std::uint64_t>(t) % size;
            d.terms.push_back({PauliString{n_qubits, x, z}, w});
        }
    }
    return d;
}

Eigen::MatrixXcd reconstruct(const PauliDecomposition& d) {
    const Eigen::Index dim = Eigen::Index{1} << d.n_qubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const PauliTerm& term : d.terms) {
        if (term.pauli.n_qubits != d.n_qubits)
            throw std::invalid_argument("reconstruct: term qubit count mismatch");
        for (std::uint64_t r = 0; r < static_cast<std::uint64_t>(dim); ++r) {
            const RowAction a = pauli_row_action(term.pauli, r);
            m(static_cast<Eigen::Index>(a.col), static_cast<Eigen::Index>(r)) +=
                term.weight * a.phase;
        }
    }
    return m;
}

double mixed_state_value(const PauliDecomposition& d) {
    for (const PauliTerm& term : d.terms)
        if (term.pauli.is_identity()) return term.weight;
    return 0.0;
}

nlohmann::json decomposition_to_json(const PauliDecomposition& d) {
    nlohmann::json j = nlohmann::json::array();
    for (const PauliTerm& term : d.terms)
        j.push_back({{"pauli", term.pauli.label()}, {"weight", term.weight}});
    return j;
}

}  // namespace nisqmodal
