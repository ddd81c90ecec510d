#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "monolab/kernels.hpp"
#include "monolab/rng.hpp"

using namespace monolab;

namespace {

const double kSqrt2 = std::sqrt(2.0);

// The induction step behind the parametric sum bound, replayed directly:
// F_N = p_N^x (1+(N-1)/s)^(x-1) + (1+s/(N-1))^(x-1) F_{N-1}, F_1 = p_1^x.
double recursion_oracle(const std::vector<double>& p, double x, double s) {
    double f = std::pow(p[0], x);
    for (std::size_t n = 2; n <= p.size(); ++n) {
        const double nm1 = static_cast<double>(n - 1);
        f = std::pow(p[n - 1], x) * std::pow(1.0 + nm1 / s, x - 1.0) +
            std::pow(1.0 + s / nm1, x - 1.0) * f;
    }
    return f;
}

// Step-by-step replay of the tau-corrected upper bound's induction.
double small_x_replay(const std::vector<double>& p, double x) {
    double f = std::pow(p[0], x);
    double prefix = p[0];
    for (std::size_t v = 2; v <= p.size(); ++v) {
        const double vd = static_cast<double>(v);
        const double tau = prefix / p[v - 1];
        f += (std::pow(vd, x) - std::pow(vd - 1.0, x)) * std::pow(p[v - 1], x);
        f += x * (vd - 1.0) * (vd - 1.0) / (vd * vd) *
             (std::pow(tau, x - 1.0) - std::pow(vd - 1.0, x - 1.0)) * std::pow(p[v - 1], x);
        prefix += p[v - 1];
    }
    return f;
}

std::vector<double> random_sequence(Rng& rng, std::size_t max_len) {
    std::vector<double> p(1 + rng.integer(max_len));
    for (auto& v : p) v = std::exp(2.0 * rng.normal());
    std::sort(p.begin(), p.end(), std::greater<>());
    return p;
}

}  // namespace

TEST_CASE("chain_monogamy equality at x = 1 and the worked point") {
    const auto eq = chain_monogamy(5.0, 1.0, 2.0, 0.7);
    CHECK(eq.level1 == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(eq.level2 == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(eq.level3 == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(eq.level4 == doctest::Approx(6.0).epsilon(1e-14));

    const auto b = chain_monogamy(2.0, 0.5, 1.0, 1.0);
    CHECK(b.level4 == doctest::Approx(3.0 - kSqrt2).epsilon(1e-14));
    CHECK(b.level4 <= std::pow(3.0, 0.5));
}

TEST_CASE("chain_monogamy ordering over random admissible tuples") {
    Rng rng(100);
    for (int trial = 0; trial < 10000; ++trial) {
        const double a = 1.0 + 9.0 * rng.uniform();
        const double t = a * std::pow(50.0, rng.uniform());
        const double x = rng.uniform();
        const double s = rng.uniform(a / t, 1.0);
        const auto b = chain_monogamy(t, x, a, s);
        const double target = std::pow(1.0 + t, x);
        const double scale = std::max(1.0, target);
        CHECK((target - b.level1) / scale >= -1e-12);
        CHECK((b.level1 - b.level2) / scale >= -1e-12);
        CHECK((b.level2 - b.level3) / scale >= -1e-12);
        CHECK((b.level3 - b.level4) / scale >= -1e-12);
    }
}

TEST_CASE("chain_monogamy is exact at s = a/t") {
    Rng rng(101);
    for (int trial = 0; trial < 1000; ++trial) {
        const double a = 1.0 + 4.0 * rng.uniform();
        const double t = a * (1.0 + 9.0 * rng.uniform());
        const double x = rng.uniform();
        const auto b = chain_monogamy(t, x, a, a / t);
        CHECK(b.level1 == doctest::Approx(std::pow(1.0 + t, x)).epsilon(1e-12));
    }
}

TEST_CASE("chain_polygamy equality at x = 1 and reversed ordering") {
    const auto eq = chain_polygamy(3.0, 1.0, 1.0, 0.5);
    CHECK(eq.level1 == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(eq.level4 == doctest::Approx(4.0).epsilon(1e-14));

    const auto b = chain_polygamy(3.0, 2.0, 1.0, 1.0);
    CHECK(b.level2 == doctest::Approx(20.0).epsilon(1e-14));
    CHECK(std::pow(4.0, 2.0) <= b.level1);

    Rng rng(102);
    for (int trial = 0; trial < 10000; ++trial) {
        const double a = 1.0 + 9.0 * rng.uniform();
        const double t = a * std::pow(50.0, rng.uniform());
        const double x = 1.0 + 5.0 * rng.uniform();
        const double s = rng.uniform(a / t, 1.0);
        const auto c = chain_polygamy(t, x, a, s);
        const double target = std::pow(1.0 + t, x);
        const double scale = std::max({1.0, target, c.level4});
        CHECK((c.level1 - target) / scale >= -1e-12);
        CHECK((c.level2 - c.level1) / scale >= -1e-12);
        CHECK((c.level3 - c.level2) / scale >= -1e-12);
        CHECK((c.level4 - c.level3) / scale >= -1e-12);
    }
}

TEST_CASE("level1 is monotone in s over the admissible interval") {
    // nonincreasing for x <= 1 (smaller s tightens the lower-bound chain),
    // nondecreasing for x >= 1
    Rng rng(110);
    for (int trial = 0; trial < 500; ++trial) {
        const double a = 1.0 + 4.0 * rng.uniform();
        const double t = a * (1.0 + 20.0 * rng.uniform());
        const double x_lo = rng.uniform();
        const double x_hi = 1.0 + 4.0 * rng.uniform();
        double prev_lo = std::numeric_limits<double>::infinity();
        double prev_hi = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < 100; ++i) {
            const double s = std::min(1.0, a / t + (1.0 - a / t) * i / 99.0);
            const double l1_lo = chain_monogamy(t, x_lo, a, s).level1;
            const double l1_hi = chain_polygamy(t, x_hi, a, s).level1;
            const double scale = std::max(1.0, std::abs(prev_hi));
            CHECK(l1_lo <= prev_lo + 1e-12);
            if (i > 0) CHECK((l1_hi - prev_hi) / scale >= -1e-12);
            prev_lo = l1_lo;
            prev_hi = l1_hi;
        }
    }
}

TEST_CASE("chain bounds reject domain violations") {
    CHECK_THROWS_WITH_AS(chain_monogamy(2.0, 0.5, 0.5, 1.0), "chain bound: require a >= 1",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(chain_monogamy(1.0, 0.5, 2.0, 1.0), "chain bound: require t >= a",
                         std::invalid_argument);
    CHECK_THROWS_AS(chain_monogamy(2.0, 1.5, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(chain_monogamy(2.0, 0.5, 1.0, 0.4), std::invalid_argument);
    CHECK_THROWS_AS(chain_monogamy(2.0, 0.5, 1.0, 1.1), std::invalid_argument);
    CHECK_THROWS_AS(chain_polygamy(2.0, 0.5, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("DecreasingSequence validation and ties") {
    CHECK_THROWS_AS(DecreasingSequence({1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(DecreasingSequence({1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(DecreasingSequence({1.0, 1e-13}), std::invalid_argument);
    CHECK_NOTHROW(DecreasingSequence({1.0, 1.0, 1.0}));
    CHECK(DecreasingSequence::sorted_from({1.0, 3.0, 2.0}).values() ==
          std::vector<double>{3.0, 2.0, 1.0});
}

TEST_CASE("s_range worked values") {
    CHECK(s_range(DecreasingSequence({1.0, 1.0, 1.0})).lo == doctest::Approx(1.0));
    CHECK(s_range(DecreasingSequence({5.0})).lo == 1.0);

    // squared concurrences quoted in the first worked comparison; the ratio
    // formula gives 0.1339 (the 0.5359 printed next to them equals C3^2/C2^2,
    // which is not an h-entry of the max)
    const DecreasingSequence ex1_sq({0.9107 * 0.9107, 0.3333 * 0.3333, 0.244 * 0.244});
    CHECK(s_range(ex1_sq).lo == doctest::Approx(0.13394297912394196).epsilon(1e-12));

    // squared CoA values of the second worked example give exactly 1/2
    const DecreasingSequence ex2_sq({9.0 / 16.0, 9.0 / 32.0, 9.0 / 64.0});
    CHECK(s_range(ex2_sq).lo == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("sum_lower_bound base cases and worked value") {
    CHECK(sum_lower_bound(DecreasingSequence({3.7}), 0.42, 1.0) ==
          doctest::Approx(std::pow(3.7, 0.42)).epsilon(1e-14));

    const DecreasingSequence p({4.0, 2.0, 1.0});
    // x = 1 telescopes exactly for any admissible s
    for (double s : {s_range(p).lo, 0.8, 1.0})
        CHECK(sum_lower_bound(p, 1.0, s) == doctest::Approx(7.0).epsilon(1e-13));

    const double v = sum_lower_bound(p, 0.5, 1.0);
    CHECK(v == doctest::Approx(2.5485473884966033).epsilon(1e-13));
    CHECK(v == doctest::Approx(recursion_oracle(p.values(), 0.5, 1.0)).epsilon(1e-13));
    CHECK(v <= std::pow(7.0, 0.5));
}

TEST_CASE("sum_lower_bound equals the recursion oracle on random inputs") {
    Rng rng(103);
    for (int trial = 0; trial < 2000; ++trial) {
        const DecreasingSequence p(random_sequence(rng, 7));
        const double x = rng.uniform();
        const double s = rng.uniform(s_range(p).lo, 1.0);
        const double closed = sum_lower_bound(p, x, s);
        const double rec = recursion_oracle(p.values(), x, s);
        CHECK(closed == doctest::Approx(rec).epsilon(1e-11));
        CHECK((std::pow(p.sum(), x) - closed) / std::max(1.0, std::pow(p.sum(), x)) >= -1e-12);
    }
}

TEST_CASE("sum_lower_bound rejects s outside the admissible range") {
    const DecreasingSequence p({4.0, 2.0, 1.0});
    CHECK_THROWS_AS(sum_lower_bound(p, 0.5, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(sum_lower_bound(p, 0.5, 1.0001), std::invalid_argument);
    CHECK_THROWS_AS(sum_lower_bound(p, 1.5, 1.0), std::invalid_argument);
}

TEST_CASE("sum_upper_bound worked values and contract") {
    const DecreasingSequence p({3.0, 1.0});
    CHECK(sum_upper_bound(p, 1.0, 1.0) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(sum_upper_bound(p, 2.0, 1.0) == doctest::Approx(20.0).epsilon(1e-14));
    CHECK(sum_upper_bound(p, 2.0, 1.0) >= std::pow(4.0, 2.0));

    Rng rng(104);
    for (int trial = 0; trial < 10000; ++trial) {
        const DecreasingSequence q(random_sequence(rng, 6));
        const double x = 1.0 + 4.0 * rng.uniform();
        const double s = rng.uniform(s_range(q).lo, 1.0);
        const double target = std::pow(q.sum(), x);
        CHECK((sum_upper_bound(q, x, s) - target) / std::max(1.0, target) >= -1e-12);
    }
}

TEST_CASE("m_refined_upper endpoints and worked value") {
    CHECK(m_refined_upper(2.0, 0.7, 2.0) == doctest::Approx(std::pow(3.0, 0.7)).epsilon(1e-13));
    CHECK(m_refined_upper(9.0, 1.0, 2.0) == doctest::Approx(10.0).epsilon(1e-13));

    const double v = m_refined_upper(5.0, 0.5, 2.0);
    CHECK(v == doctest::Approx(2.496151181431885).epsilon(1e-13));
    CHECK(v >= std::sqrt(6.0));
    CHECK(v <= std::sqrt(5.0) + kSqrt2 - 1.0);

    CHECK_THROWS_AS(m_refined_upper(0.5, 0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(m_refined_upper(5.0, 0.5, 0.9), std::invalid_argument);
    CHECK_THROWS_AS(m_refined_upper(5.0, 1.5, 2.0), std::invalid_argument);
}

TEST_CASE("power_increment pins the first step to 1") {
    CHECK(power_increment(1, 0.0) == 1.0);
    CHECK(power_increment(1, 0.5) == 1.0);
    CHECK(power_increment(1, 1.0) == 1.0);
    CHECK(power_increment(2, 0.0) == doctest::Approx(0.0));
    CHECK(power_increment(2, 1.0) == doctest::Approx(1.0));
    CHECK(power_increment(3, 0.5) == doctest::Approx(std::sqrt(3.0) - kSqrt2).epsilon(1e-14));
}

TEST_CASE("sum_upper_small_x worked value and replay oracle") {
    CHECK(sum_upper_small_x(DecreasingSequence({2.5}), 0.3) ==
          doctest::Approx(std::pow(2.5, 0.3)).epsilon(1e-14));

    const DecreasingSequence p({4.0, 2.0, 1.0});
    CHECK(sum_upper_small_x(p, 1.0) == doctest::Approx(7.0).epsilon(1e-13));

    const double v = sum_upper_small_x(p, 0.5);
    CHECK(v == doctest::Approx(2.7854339895876756).epsilon(1e-13));
    CHECK(v >= std::pow(7.0, 0.5));
    CHECK(v <= 2.903623682822687);  // the uncorrected increment sum
    CHECK(v == doctest::Approx(small_x_replay(p.values(), 0.5)).epsilon(1e-13));

    Rng rng(105);
    for (int trial = 0; trial < 5000; ++trial) {
        const DecreasingSequence q(random_sequence(rng, 7));
        const double x = rng.uniform();
        const double bound = sum_upper_small_x(q, x);
        const double target = std::pow(q.sum(), x);
        CHECK((bound - target) / std::max(1.0, target) >= -1e-12);
        CHECK(bound == doctest::Approx(small_x_replay(q.values(), x)).epsilon(1e-10));
    }
}

TEST_CASE("tau ratios never fall below their index") {
    Rng rng(106);
    for (int trial = 0; trial < 5000; ++trial) {
        const auto p = random_sequence(rng, 8);
        double prefix = p[0];
        for (std::size_t v = 2; v <= p.size(); ++v) {
            CHECK(prefix / p[v - 1] >= static_cast<double>(v - 1) - 1e-12);
            prefix += p[v - 1];
        }
    }
}

TEST_CASE("parametric prefactors sum to 1 at x = 0") {
    Rng rng(107);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t m = 1 + rng.integer(8);
        const double s = rng.uniform(0.05, 1.0);
        double sum = 0.0;
        for (std::size_t k = 1; k <= m; ++k) sum += parametric_prefactor(k, m, 0.0, s);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("level-3 and level-4 prefactors at the exponent endpoints") {
    // x = 1: every weight collapses to 1
    for (std::size_t k = 1; k <= 4; ++k) {
        CHECK(chain_prefactor_level3(k, 4, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(chain_prefactor_level4(k, 4, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    }
    // x = 0: only the last term survives
    CHECK(chain_prefactor_level3(4, 4, 0.0) == 1.0);
    CHECK(chain_prefactor_level3(1, 4, 0.0) == doctest::Approx(0.0));
    CHECK(chain_prefactor_level4(4, 4, 0.0) == 1.0);
    CHECK(chain_prefactor_level4(1, 4, 0.0) == doctest::Approx(0.0));
}
