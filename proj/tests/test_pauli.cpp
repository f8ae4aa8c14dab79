#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "nisqmodal/oscillator.hpp"
#include "nisqmodal/pauli.hpp"
#include "oracles.hpp"

using namespace nisqmodal;

namespace {

std::string label_from_index(std::uint64_t x, std::uint64_t z, int n) {
    PauliString p{n, x, z};
    return p.label();
}

}  // namespace

TEST_CASE("labels round trip through the mask encoding") {
    const auto p = PauliString::from_label("IXZY");
    CHECK(p.n_qubits == 4);
    CHECK(p.x_mask == 0b1010);  // X on qubit 1, Y on qubit 3
    CHECK(p.z_mask == 0b1100);  // Z on qubit 2, Y on qubit 3
    CHECK(p.label() == "IXZY");
    CHECK(p.y_count() == 1);
    CHECK(!p.is_identity());

    CHECK(PauliString::from_label("II").is_identity());
    CHECK(PauliString{3, 0, 0}.label() == "III");
    CHECK_THROWS_AS(PauliString::from_label("IXQ"), std::invalid_argument);
    CHECK_THROWS_AS(PauliString::from_label(""), std::invalid_argument);
}

TEST_CASE("row action on single-qubit strings") {
    const auto z = PauliString::from_label("Z");
    auto az = pauli_row_action(z, 1);
    CHECK(az.col == 1);
    CHECK(az.phase == std::complex<double>(-1.0, 0.0));

    const auto x = PauliString::from_label("X");
    auto ax = pauli_row_action(x, 0);
    CHECK(ax.col == 1);
    CHECK(ax.phase == std::complex<double>(1.0, 0.0));

    const auto y = PauliString::from_label("Y");
    auto ay0 = pauli_row_action(y, 0);
    CHECK(ay0.col == 1);
    CHECK(ay0.phase == std::complex<double>(0.0, 1.0));
    auto ay1 = pauli_row_action(y, 1);
    CHECK(ay1.col == 0);
    CHECK(ay1.phase == std::complex<double>(0.0, -1.0));

    CHECK_THROWS_AS(pauli_row_action(z, 2), std::invalid_argument);
}

TEST_CASE("row action agrees with dense Kronecker products") {
    for (int n = 1; n <= 3; ++n) {
        const std::uint64_t dim = std::uint64_t{1} << n;
        for (std::uint64_t x = 0; x < dim; ++x)
            for (std::uint64_t z = 0; z < dim; ++z) {
                const PauliString p{n, x, z};
                const Eigen::MatrixXcd dense = oracles::dense_pauli(p.label());
                for (std::uint64_t row = 0; row < dim; ++row) {
                    const RowAction a = pauli_row_action(p, row);
                    // P|row> = phase |col>: column `row` of the dense matrix.
                    for (std::uint64_t r = 0; r < dim; ++r) {
                        const std::complex<double> expected =
                            (r == a.col) ? a.phase : std::complex<double>(0.0, 0.0);
                        CHECK(std::abs(dense(static_cast<Eigen::Index>(r),
                                             static_cast<Eigen::Index>(row)) -
                                       expected) < 1e-15);
                    }
                }
            }
    }
}

TEST_CASE("decompose reproduces the documented examples") {
    Eigen::MatrixXd h(2, 2);
    h << 2, -1, -1, 2;
    const auto d = decompose(h);
    REQUIRE(d.terms.size() == 2);
    CHECK(d.terms[0].pauli.label() == "I");
    CHECK(d.terms[0].weight == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(d.terms[1].pauli.label() == "X");
    CHECK(d.terms[1].weight == doctest::Approx(-1.0).epsilon(1e-14));

    const auto ident = decompose(Eigen::MatrixXd::Identity(2, 2));
    REQUIRE(ident.terms.size() == 1);
    CHECK(ident.terms[0].pauli.is_identity());
    CHECK(ident.terms[0].weight == doctest::Approx(1.0));

    // All-zero matrix keeps its zero-weight identity term.
    const auto zero = decompose(Eigen::MatrixXd::Zero(2, 2));
    REQUIRE(zero.terms.size() == 1);
    CHECK(zero.terms[0].pauli.is_identity());
    CHECK(zero.terms[0].weight == 0.0);
}

TEST_CASE("decompose validates dimension and symmetry") {
    CHECK_THROWS_AS(decompose(Eigen::MatrixXd::Identity(3, 3)), std::invalid_argument);
    Eigen::MatrixXd asym(2, 2);
    asym << 0, 1, 0, 0;
    CHECK_THROWS_AS(decompose(asym), std::invalid_argument);
}

TEST_CASE("reconstruct reproduces the documented examples") {
    PauliDecomposition d;
    d.n_qubits = 1;
    d.terms = {{PauliString::from_label("I"), 1.0}, {PauliString::from_label("Z"), 1.0}};
    const auto m = reconstruct(d);
    CHECK(std::abs(m(0, 0) - 2.0) < 1e-15);
    CHECK(std::abs(m(0, 1)) < 1e-15);
    CHECK(std::abs(m(1, 0)) < 1e-15);
    CHECK(std::abs(m(1, 1)) < 1e-15);

    PauliDecomposition y;
    y.n_qubits = 1;
    y.terms = {{PauliString::from_label("Y"), 1.0}};
    const auto my = reconstruct(y);
    CHECK(std::abs(my(0, 1) - std::complex<double>(0, -1)) < 1e-15);
    CHECK(std::abs(my(1, 0) - std::complex<double>(0, 1)) < 1e-15);

    Eigen::MatrixXd h(2, 2);
    h << 2, -1, -1, 2;
    const auto round = reconstruct(decompose(h));
    CHECK((round.real() - h).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(round.imag().cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("round trip holds on random symmetric matrices up to 4 qubits") {
    std::mt19937_64 rng(20240811);
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 30; ++trial) {
            const Eigen::MatrixXd h = oracles::random_symmetric(1 << n, rng);
            const auto round = reconstruct(decompose(h));
            CHECK((round.real() - h).cwiseAbs().maxCoeff() < 1e-10);
            CHECK(round.imag().cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("weights match the dense trace oracle; odd-Y traces vanish") {
    std::mt19937_64 rng(77);
    for (int n = 1; n <= 3; ++n) {
        const std::uint64_t dim = std::uint64_t{1} << n;
        const Eigen::MatrixXd h = oracles::random_symmetric(static_cast<int>(dim), rng);
        const auto d = decompose(h);

        for (std::uint64_t x = 0; x < dim; ++x)
            for (std::uint64_t z = 0; z < dim; ++z) {
                const PauliString p{n, x, z};
                const std::complex<double> trace =
                    (oracles::dense_pauli(p.label()) * h.cast<std::complex<double>>())
                        .trace();
                const double oracle_weight = trace.real() / static_cast<double>(dim);
                CHECK(std::abs(trace.imag()) < 1e-12);

                double stored = 0.0;
                for (const auto& term : d.terms)
                    if (term.pauli == p) stored = term.weight;
                if (p.y_count() % 2 == 1) {
                    CHECK(std::abs(oracle_weight) < 1e-12);
                    CHECK(stored == 0.0);
                } else {
                    CHECK(std::abs(stored - oracle_weight) < 1e-12);
                }
            }
    }
}

TEST_CASE("decomposition satisfies the Pauli-basis Parseval identity") {
    std::mt19937_64 rng(99);
    for (int n = 1; n <= 4; ++n) {
        const Eigen::MatrixXd h = oracles::random_symmetric(1 << n, rng);
        const auto d = decompose(h);
        double sum = 0.0;
        for (const auto& term : d.terms) sum += term.weight * term.weight;
        sum *= static_cast<double>(Eigen::Index{1} << n);
        CHECK(std::abs(sum - h.squaredNorm()) < 1e-9);
    }
}

TEST_CASE("terms are identity-first, lexicographic and unique") {
    std::mt19937_64 rng(5);
    const Eigen::MatrixXd h = oracles::random_symmetric(8, rng);
    const auto d = decompose(h);
    REQUIRE(!d.terms.empty());
    CHECK(d.terms[0].pauli.is_identity());
    for (std::size_t i = 1; i < d.terms.size(); ++i) {
        const auto& a = d.terms[i - 1].pauli;
        const auto& b = d.terms[i].pauli;
        CHECK((a.x_mask < b.x_mask || (a.x_mask == b.x_mask && a.z_mask < b.z_mask)));
        CHECK(std::isfinite(d.terms[i].weight));
    }
}

TEST_CASE("parallel decomposition matches the serial result exactly") {
    std::mt19937_64 rng(31);
    const Eigen::MatrixXd h = oracles::random_symmetric(16, rng);
    const auto serial = decompose(h, 1e-12, 1e-10, 1);
    const auto parallel = decompose(h, 1e-12, 1e-10, 4);
    REQUIRE(serial.terms.size() == parallel.terms.size());
    for (std::size_t i = 0; i < serial.terms.size(); ++i) {
        CHECK(serial.terms[i].pauli == parallel.terms[i].pauli);
        CHECK(serial.terms[i].weight == parallel.terms[i].weight);
    }
}

TEST_CASE("mixed_state_value is the identity weight, i.e. trace over dimension") {
    Eigen::MatrixXd h2(2, 2);
    h2 << 2, -1, -1, 2;
    CHECK(mixed_state_value(decompose(h2)) == doctest::Approx(2.0).epsilon(1e-14));

    const auto chain3 = assemble_dynamical_matrix(
        build_chain(3, 1.0, 1.0, ChainBoundary::fixed_fixed));
    const auto padded = pad_to_qubit_dimension(chain3);
    CHECK(mixed_state_value(decompose(padded.h)) == doctest::Approx(1.5).epsilon(1e-14));

    CHECK(mixed_state_value(decompose(Eigen::MatrixXd::Zero(2, 2))) == 0.0);

    std::mt19937_64 rng(13);
    for (int n = 1; n <= 4; ++n) {
        const Eigen::MatrixXd h = oracles::random_symmetric(1 << n, rng);
        CHECK(std::abs(mixed_state_value(decompose(h)) -
                       h.trace() / static_cast<double>(Eigen::Index{1} << n)) < 1e-12);
    }
}

TEST_CASE("decomposition json uses qubit-0-leftmost labels") {
    // Z on qubit 1 of two: dense matrix diag(1, 1, -1, -1).
    const Eigen::MatrixXd h = oracles::dense_pauli("IZ").real();
    const auto j = decomposition_to_json(decompose(h));
    REQUIRE(j.size() == 2);  // zero-weight identity retained
    CHECK(j[0]["pauli"] == "II");
    CHECK(j[0]["weight"].get<double>() == doctest::Approx(0.0));
    CHECK(j[1]["pauli"] == "IZ");
    CHECK(j[1]["weight"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("label helper covers the full single-qubit alphabet") {
    CHECK(label_from_index(0, 0, 1) == "I");
    CHECK(label_from_index(1, 0, 1) == "X");
    CHECK(label_from_index(0, 1, 1) == "Z");
    CHECK(label_from_index(1, 1, 1) == "Y");
}
