#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "monolab/measures.hpp"
#include "monolab/rng.hpp"
#include "monolab/states.hpp"

using namespace monolab;

namespace {

const double kSqrt2 = std::sqrt(2.0);

StateVector bell_state() {
    const double h = 1.0 / kSqrt2;
    return StateVector(2, {h, 0.0, 0.0, h});
}

ComplexMatrix wclass_pair(int a, int b) {
    const auto psi = w_class_state(WClassParams(0.75, 0.5, kSqrt2 / 4.0, 0.25));
    return partial_trace(density_matrix(psi), PartitionSpec({a, b}, 4));
}

}  // namespace

TEST_CASE("pure concurrence endpoints") {
    CHECK(pure_concurrence(bell_state(), PartitionSpec({0}, 2)) ==
          doctest::Approx(1.0).epsilon(1e-12));

    StateVector product(2, {1.0, 0.0, 0.0, 0.0});
    CHECK(pure_concurrence(product, PartitionSpec({0}, 2)) == doctest::Approx(0.0));

    // symmetric under complementing the kept side
    const auto psi = random_pure_state(4, 99);
    const double left = pure_concurrence(psi, PartitionSpec({0, 1}, 4));
    const double right = pure_concurrence(psi, PartitionSpec({2, 3}, 4));
    CHECK(left == doctest::Approx(right).epsilon(1e-10));
}

TEST_CASE("two-qubit concurrence closed form") {
    CHECK(two_qubit_concurrence(density_matrix(bell_state())) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(two_qubit_concurrence(ComplexMatrix::identity(4) * Complex(0.25)) ==
          doctest::Approx(0.0));
    CHECK(two_qubit_concurrence(wclass_pair(0, 1)) == doctest::Approx(0.75).epsilon(1e-11));
}

TEST_CASE("two-qubit CoA closed form") {
    CHECK(two_qubit_coa(density_matrix(bell_state())) == doctest::Approx(1.0).epsilon(1e-10));
    // I/4 is an equal mixture of the four Bell states, each with concurrence 1
    CHECK(two_qubit_coa(ComplexMatrix::identity(4) * Complex(0.25)) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(two_qubit_coa(wclass_pair(0, 2)) ==
          doctest::Approx(3.0 * kSqrt2 / 8.0).epsilon(1e-11));
}

TEST_CASE("CoA dominates concurrence") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto psi = random_pure_state(4, 1000 + trial);
        const auto rho = partial_trace(density_matrix(psi), PartitionSpec({0, 1}, 4));
        CHECK(two_qubit_coa(rho) >= two_qubit_concurrence(rho) - 1e-12);
    }
}

TEST_CASE("measures reject non-density input") {
    CHECK_THROWS_AS(two_qubit_concurrence(ComplexMatrix::identity(4)), std::invalid_argument);
    ComplexMatrix wrong_dim = ComplexMatrix::identity(2) * Complex(0.5);
    CHECK_THROWS_AS(two_qubit_concurrence(wrong_dim), std::invalid_argument);
    CHECK_THROWS_AS(two_qubit_coa(ComplexMatrix::identity(4)), std::invalid_argument);
}

TEST_CASE("linear entropy") {
    CHECK(linear_entropy(density_matrix(bell_state())) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(linear_entropy(ComplexMatrix::identity(2) * Complex(0.5)) ==
          doctest::Approx(0.5).epsilon(1e-12));
    // 2 T(rho_AB1) recovers the squared joint concurrence: 39/64
    CHECK(2.0 * linear_entropy(wclass_pair(0, 1)) == doctest::Approx(39.0 / 64.0).epsilon(1e-12));
}

TEST_CASE("linear entropy triangle property on random marginals") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto psi = random_pure_state(4, 4000 + seed);
        const auto rho = partial_trace(density_matrix(psi), PartitionSpec({0, 1}, 4));
        const double t_ab = linear_entropy(rho);
        const double t_a = linear_entropy(partial_trace(rho, PartitionSpec({0}, 2)));
        const double t_b = linear_entropy(partial_trace(rho, PartitionSpec({1}, 2)));
        CHECK(t_ab >= std::abs(t_a - t_b) - 1e-8);
        CHECK(t_ab <= t_a + t_b + 1e-8);

        // three-qubit marginal, split 1|2
        const auto psi5 = random_pure_state(5, 4100 + seed);
        const auto rho3 = partial_trace(density_matrix(psi5), PartitionSpec({0, 1, 2}, 5));
        const double t3 = linear_entropy(rho3);
        const double t3_a = linear_entropy(partial_trace(rho3, PartitionSpec({0}, 3)));
        const double t3_bc = linear_entropy(partial_trace(rho3, PartitionSpec({1, 2}, 3)));
        CHECK(t3 >= std::abs(t3_a - t3_bc) - 1e-8);
        CHECK(t3 <= t3_a + t3_bc + 1e-8);
    }
}

TEST_CASE("pure-state consistency: 2 T(rho_A) equals the squared concurrence") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n = 2 + static_cast<int>(seed % 3);
        const auto psi = random_pure_state(n, 5000 + seed);
        const auto rho_a = partial_trace(density_matrix(psi), PartitionSpec({0}, n));
        const double c = pure_concurrence(psi, PartitionSpec({0}, n));
        CHECK(std::abs(2.0 * linear_entropy(rho_a) - c * c) < 1e-9);
        // single-qubit side caps the value at sqrt(2 (1 - 1/2)) = 1
        CHECK(c <= 1.0 + 1e-12);
    }
}

TEST_CASE("w-class marginal on (A, B1) is rank-deficient with concurrence 3/4") {
    const auto rho = wclass_pair(0, 1);
    const auto evs = hermitian_eigenvalues(rho);
    CHECK(std::abs(evs[3]) < 1e-12);  // rank <= 3
    CHECK(two_qubit_concurrence(rho) == doctest::Approx(0.75).epsilon(1e-11));
}

TEST_CASE("pairwise measures: anchors, partners and worked values") {
    const auto psi = w_class_state(WClassParams(0.75, 0.5, kSqrt2 / 4.0, 0.25));

    const auto coa_b1 = pairwise_measures(psi, 1, MeasureKind::coa);
    CHECK(coa_b1.partners == std::vector<int>{0, 2, 3});
    CHECK(coa_b1.values[0] == doctest::Approx(0.75).epsilon(1e-11));
    CHECK(coa_b1.values[1] == doctest::Approx(kSqrt2 / 4.0).epsilon(1e-10));
    CHECK(coa_b1.values[2] == doctest::Approx(0.25).epsilon(1e-11));

    StateVector product(3, {1.0, 0, 0, 0, 0, 0, 0, 0});
    const auto zeros = pairwise_measures(product, 0, MeasureKind::concurrence);
    for (double v : zeros.values) CHECK(v == doctest::Approx(0.0));

    CHECK_THROWS_AS(pairwise_measures(bell_state(), 0, MeasureKind::coa), std::invalid_argument);
    CHECK_THROWS_AS(pairwise_measures(psi, 4, MeasureKind::coa), std::invalid_argument);
}

TEST_CASE("monogamy and polygamy premises on random states") {
    for (int n : {3, 4}) {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const auto psi = random_pure_state(n, 7000 + seed);
            const double c = pure_concurrence(psi, PartitionSpec({0}, n));
            const auto conc = pairwise_measures(psi, 0, MeasureKind::concurrence);
            const auto coa = pairwise_measures(psi, 0, MeasureKind::coa);
            double sum_c2 = 0.0, sum_a2 = 0.0;
            for (double v : conc.values) sum_c2 += v * v;
            for (double v : coa.values) sum_a2 += v * v;
            CHECK(c * c >= sum_c2 - 1e-8);
            CHECK(c * c <= sum_a2 + 1e-8);
        }
    }
}

TEST_CASE("two-qubit closed form agrees with the pure-state formula") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto psi = random_pure_state(2, 8000 + seed);
        const double mixed = two_qubit_concurrence(density_matrix(psi));
        const double pure = pure_concurrence(psi, PartitionSpec({0}, 2));
        CHECK(std::abs(mixed - pure) < 1e-8);
    }
}

TEST_CASE("qubit labels") {
    CHECK(qubit_label(0) == "A");
    CHECK(qubit_label(2) == "B2");
    CHECK(parse_qubit_label("A", 4) == 0);
    CHECK(parse_qubit_label("B3", 4) == 3);
    CHECK_THROWS_AS(parse_qubit_label("B4", 4), std::invalid_argument);
    CHECK_THROWS_AS(parse_qubit_label("Q1", 4), std::invalid_argument);
}
