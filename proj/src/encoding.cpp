#include "nisqmodal/encoding.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nisqmodal {

Circuit synthesize_encoding(const Eigen::Ref<const Eigen::VectorXd>& v,
                            double elision_tol) {
    const Eigen::Index len = v.size();
    if (len < 2 || (len & (len - 1)) != 0)
        throw std::invalid_argument("synthesize_encoding: vector length must be a power of two >= 2");
    if (std::abs(v.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("synthesize_encoding: vector must have unit norm");

    int n = 0;
    while ((Eigen::Index{1} << n) < len) ++n;

    // Branch amplitudes: tree[j][p] is the norm of the block of v selected
    // by the j-bit index prefix p. Leaves keep their sign; interior nodes
    // are nonnegative.
    std::vector<std::vector<double>> tree(static_cast<std::size_t>(n) + 1);
    tree[static_cast<std::size_t>(n)].assign(v.data(), v.data() + len);
    for (int j = n - 1; j >= 0; --j) {
        const auto& child = tree[static_cast<std::size_t>(j) + 1];
        auto& node = tree[static_cast<std::size_t>(j)];
        node.resize(std::size_t{1} << j);
        for (std::size_t p = 0; p < node.size(); ++p)
            node[p] = std::hypot(child[2 * p], child[2 * p + 1]);
    }

    Circuit circuit;
    circuit.n_qubits = n;

    for (int level = 0; level < n; ++level) {
        const int target = n - 1 - level;
        const std::size_t k_count = std::size_t{1} << level;
        const auto& child = tree[static_cast<std::size_t>(level) + 1];

        // One rotation per control pattern: distributes the branch amplitude
        // of prefix p between its two children. atan2(0, 0) = 0 takes care
        // of dead branches.
        std::vector<double> theta(k_count);
        for (std::size_t p = 0; p < k_count; ++p)
            theta[p] = 2.0 * std::atan2(child[2 * p + 1], child[2 * p]);

        if (level == 0) {
            if (std::abs(theta[0]) > elision_tol) append_ry(circuit, target, theta[0]);
            continue;
        }

        // Gray-code expansion of the multiplexor: under control pattern k
        // the rotations compose to sum_i (-1)^popcount(k & gray(i)) * phi_i,
        // so phi = 2^-level * M^T theta recovers every theta exactly.
        std::vector<double> phi(k_count, 0.0);
        for (std::size_t i = 0; i < k_count; ++i) {
            const std::uint64_t gray = i ^ (i >> 1);
            double acc = 0.0;
            for (std::size_t k = 0; k < k_count; ++k)
                acc += (std::popcount(k & gray) & 1) ? -theta[k] : theta[k];
            phi[i] = acc / static_cast<double>(k_count);
        }

        // Emit, merging the cnots between surviving rotations: cnots onto a
        // common target commute, so a run of them reduces to the XOR of its
        // control bits.
        std::uint64_t pending = 0;
        auto flush = [&] {
            for (int b = 0; b < level; ++b)
                if ((pending >> b) & 1) append_cnot(circuit, n - level + b, target);
            pending = 0;
        };
        for (std::size_t i = 0; i < k_count; ++i) {
            if (std::abs(phi[i]) > elision_tol) {
                flush();
                append_ry(circuit, target, phi[i]);
            }
            const int changed_bit =
                (i + 1 < k_count) ? std::countr_zero(i + 1) : level - 1;
            pending ^= std::uint64_t{1} << changed_bit;
        }
        flush();
    }
    return circuit;
}

}  // namespace nisqmodal
