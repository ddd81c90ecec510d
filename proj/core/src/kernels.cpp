#include "monolab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace monolab {

namespace {

void check_chain_domain(double t, double x, double a, double s, bool monogamy) {
    if (!(a >= 1.0)) throw std::invalid_argument("chain bound: require a >= 1");
    if (!(t >= a)) throw std::invalid_argument("chain bound: require t >= a");
    if (monogamy) {
        if (!(x >= 0.0 && x <= 1.0))
            throw std::invalid_argument("chain_monogamy: require 0 <= x <= 1");
    } else {
        if (!(x >= 1.0)) throw std::invalid_argument("chain_polygamy: require x >= 1");
    }
    if (!(s >= a / t)) throw std::invalid_argument("chain bound: require s >= a/t");
    if (!(s <= 1.0)) throw std::invalid_argument("chain bound: require s <= 1");
}

ChainBounds chain_levels(double t, double x, double a, double s) {
    const double tx = std::pow(t, x);
    ChainBounds b{};
    b.level1 = std::pow(1.0 + a / s, x - 1.0) + std::pow(1.0 + s / a, x - 1.0) * tx;
    b.level2 = std::pow(1.0 + a, x - 1.0) + std::pow(1.0 + 1.0 / a, x - 1.0) * tx;
    b.level3 = 1.0 + (std::pow(1.0 + a, x) - 1.0) / std::pow(a, x) * tx;
    b.level4 = 1.0 + (std::pow(2.0, x) - 1.0) * tx;
    return b;
}

}  // namespace

DecreasingSequence::DecreasingSequence(std::vector<double> p) : p_(std::move(p)) {
    if (p_.empty()) throw std::invalid_argument("DecreasingSequence: need at least one value");
    for (std::size_t i = 0; i < p_.size(); ++i) {
        if (!(p_[i] >= kPositiveThreshold))
            throw std::invalid_argument(
                "DecreasingSequence: values below the positivity threshold must be dropped");
        if (i > 0 && p_[i] > p_[i - 1])
            throw std::invalid_argument("DecreasingSequence: values must be nonincreasing");
    }
}

DecreasingSequence DecreasingSequence::sorted_from(std::vector<double> values) {
    std::stable_sort(values.begin(), values.end(), std::greater<>());
    return DecreasingSequence(std::move(values));
}

double DecreasingSequence::sum() const {
    double s = 0.0;
    for (double v : p_) s += v;
    return s;
}

SRange s_range(const DecreasingSequence& p) {
    if (p.size() < 2) return SRange{1.0, 1.0};
    double lo = 0.0;
    double prefix = 0.0;
    for (std::size_t h = 1; h < p.size(); ++h) {
        prefix += p[h - 1];
        lo = std::max(lo, static_cast<double>(h) * p[h] / prefix);
    }
    return SRange{std::min(lo, 1.0), 1.0};
}

ChainBounds chain_monogamy(double t, double x, double a, double s) {
    check_chain_domain(t, x, a, s, /*monogamy=*/true);
    return chain_levels(t, x, a, s);
}

ChainBounds chain_polygamy(double t, double x, double a, double s) {
    check_chain_domain(t, x, a, s, /*monogamy=*/false);
    return chain_levels(t, x, a, s);
}

double parametric_prefactor(std::size_t k, std::size_t m, double x, double s) {
    if (k == 0 || k > m) throw std::invalid_argument("parametric_prefactor: k out of range");
    if (k == m) return std::pow(1.0 + static_cast<double>(m - 1) / s, x - 1.0);
    double w = std::pow(1.0 + static_cast<double>(k - 1) / s, x - 1.0);
    for (std::size_t j = 1; j <= m - k; ++j)
        w *= std::pow(1.0 + s / static_cast<double>(m - j), x - 1.0);
    return w;
}

double chain_prefactor_level3(std::size_t k, std::size_t m, double x) {
    if (k == 0 || k > m) throw std::invalid_argument("chain_prefactor_level3: k out of range");
    double w = 1.0;
    for (std::size_t j = 1; j <= m - k; ++j) {
        const double d = static_cast<double>(m - j);
        w *= (std::pow(d + 1.0, x) - 1.0) / std::pow(d, x);
    }
    return w;
}

double chain_prefactor_level4(std::size_t k, std::size_t m, double x) {
    if (k == 0 || k > m) throw std::invalid_argument("chain_prefactor_level4: k out of range");
    return std::pow(std::pow(2.0, x) - 1.0, static_cast<double>(m - k));
}

namespace {

double parametric_sum(const DecreasingSequence& p, double x, double s) {
    const auto lo = s_range(p).lo;
    if (!(s >= lo && s <= 1.0))
        throw std::invalid_argument("parametric sum bound: s outside admissible range [" +
                                    std::to_string(lo) + ", 1]");
    const std::size_t n = p.size();
    double total = 0.0;
    for (std::size_t k = 1; k <= n; ++k)
        total += parametric_prefactor(k, n, x, s) * std::pow(p[k - 1], x);
    return total;
}

}  // namespace

double sum_lower_bound(const DecreasingSequence& p, double x, double s) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument("sum_lower_bound: require 0 <= x <= 1");
    return parametric_sum(p, x, s);
}

double sum_upper_bound(const DecreasingSequence& p, double x, double s) {
    if (!(x >= 1.0)) throw std::invalid_argument("sum_upper_bound: require x >= 1");
    return parametric_sum(p, x, s);
}

double m_refined_upper(double t, double x, double m) {
    if (!(m >= 1.0)) throw std::invalid_argument("m_refined_upper: require m >= 1");
    if (!(t >= m)) throw std::invalid_argument("m_refined_upper: require t >= m");
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument("m_refined_upper: require 0 <= x <= 1");
    const double correction =
        x * m * m / ((1.0 + m) * (1.0 + m)) * (std::pow(t, x - 1.0) - std::pow(m, x - 1.0));
    return std::pow(t, x) + std::pow(1.0 + m, x) - std::pow(m, x) + correction;
}

double power_increment(std::size_t k, double u) {
    if (k == 0) throw std::invalid_argument("power_increment: k must be >= 1");
    if (k == 1) return 1.0;
    return std::pow(static_cast<double>(k), u) - std::pow(static_cast<double>(k - 1), u);
}

double sum_upper_small_x(const DecreasingSequence& p, double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument("sum_upper_small_x: require 0 <= x <= 1");
    const std::size_t n = p.size();
    double total = 0.0;
    double prefix = 0.0;
    for (std::size_t v = 1; v <= n; ++v) {
        const double pv_x = std::pow(p[v - 1], x);
        total += power_increment(v, x) * pv_x;
        if (v >= 2) {
            const double tau = prefix / p[v - 1];
            const double vm1 = static_cast<double>(v - 1);
            total += x * (vm1 * vm1) / static_cast<double>(v * v) *
                     (std::pow(tau, x - 1.0) - std::pow(vm1, x - 1.0)) * pv_x;
        }
        prefix += p[v - 1];
    }
    return total;
}

}  // namespace monolab
