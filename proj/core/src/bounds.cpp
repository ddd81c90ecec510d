#include "monolab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace monolab {

OrderedMeasures::OrderedMeasures(std::vector<double> raw_values, double base_exponent)
    : base_(base_exponent) {
    if (!(base_ > 0.0)) throw std::invalid_argument("OrderedMeasures: base exponent must be > 0");
    for (double v : raw_values) {
        if (v < -kReportedValueTol)
            throw std::invalid_argument("OrderedMeasures: negative measure value");
        if (v > kPositiveThreshold)
            values_.push_back(v);
        else
            ++dropped_;
    }
    if (values_.empty())
        throw std::invalid_argument("OrderedMeasures: no measure value above the positivity threshold");
    std::stable_sort(values_.begin(), values_.end(), std::greater<>());

    std::vector<double> powered(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) powered[i] = std::pow(values_[i], base_);
    s_admissible_ = s_range(DecreasingSequence(powered));

    double prefix = powered.empty() ? 0.0 : powered[0];
    for (std::size_t p = 2; p <= values_.size(); ++p) {
        tau_.push_back(prefix / powered[p - 1]);
        prefix += powered[p - 1];
    }
}

OrderedMeasures OrderedMeasures::from_measures(const MeasureVector& mv, double base_exponent) {
    return OrderedMeasures(mv.values, base_exponent);
}

namespace {

void check_s(const OrderedMeasures& m, double s) {
    if (!(s >= m.s_admissible().lo && s <= 1.0))
        throw std::invalid_argument("bound: s outside the admissible range");
}

void check_base(const OrderedMeasures& m, const BoundParams& p) {
    if (p.base != m.base_exponent())
        throw std::invalid_argument("bound: BoundParams base does not match the measures");
}

double parametric_bound(const OrderedMeasures& m, double exponent, double s) {
    const double x = exponent / m.base_exponent();
    const std::size_t n = m.size();
    double total = 0.0;
    for (std::size_t k = 1; k <= n; ++k)
        total += parametric_prefactor(k, n, x, s) * std::pow(m.values()[k - 1], exponent);
    return total;
}

ChainLevels chain_levels(const OrderedMeasures& m, double exponent) {
    const double x = exponent / m.base_exponent();
    const std::size_t n = m.size();
    ChainLevels out{};
    out.level2 = parametric_bound(m, exponent, 1.0);
    for (std::size_t k = 1; k <= n; ++k) {
        const double ek = std::pow(m.values()[k - 1], exponent);
        out.level3 += chain_prefactor_level3(k, n, x) * ek;
        out.level4 += chain_prefactor_level4(k, n, x) * ek;
    }
    return out;
}

}  // namespace

double monogamy_lower(const OrderedMeasures& m, const BoundParams& p) {
    check_base(m, p);
    if (!(p.exponent >= 0.0 && p.exponent <= m.base_exponent()))
        throw std::invalid_argument("monogamy_lower: require 0 <= alpha <= base exponent");
    check_s(m, p.s);
    return parametric_bound(m, p.exponent, p.s);
}

ChainLevels monogamy_competitors(const OrderedMeasures& m, double alpha) {
    if (!(alpha >= 0.0 && alpha <= m.base_exponent()))
        throw std::invalid_argument("monogamy_competitors: require 0 <= alpha <= base exponent");
    return chain_levels(m, alpha);
}

double polygamy_upper_high(const OrderedMeasures& m, const BoundParams& p) {
    check_base(m, p);
    if (!(p.exponent >= m.base_exponent()))
        throw std::invalid_argument("polygamy_upper_high: require beta >= base exponent");
    check_s(m, p.s);
    return parametric_bound(m, p.exponent, p.s);
}

ChainLevels polygamy_competitors_high(const OrderedMeasures& m, double beta) {
    if (!(beta >= m.base_exponent()))
        throw std::invalid_argument("polygamy_competitors_high: require beta >= base exponent");
    return chain_levels(m, beta);
}

double polygamy_upper_low(const OrderedMeasures& m, double omega) {
    if (!(omega >= 0.0 && omega <= m.base_exponent()))
        throw std::invalid_argument("polygamy_upper_low: require 0 <= omega <= base exponent");
    const double u = omega / m.base_exponent();
    double total = 0.0;
    for (std::size_t k = 1; k <= m.size(); ++k) {
        const double ek = std::pow(m.values()[k - 1], omega);
        total += power_increment(k, u) * ek;
        if (k >= 2) {
            const double km1 = static_cast<double>(k - 1);
            const double tau = m.tau()[k - 2];
            total += u * (km1 * km1) / static_cast<double>(k * k) *
                     (std::pow(tau, u - 1.0) - std::pow(km1, u - 1.0)) * ek;
        }
    }
    return total;
}

LowChainLevels polygamy_chain_low(const OrderedMeasures& m, double omega) {
    if (!(omega >= 0.0 && omega <= m.base_exponent()))
        throw std::invalid_argument("polygamy_chain_low: require 0 <= omega <= base exponent");
    const double u = omega / m.base_exponent();
    LowChainLevels out{};
    const double two_coeff = std::pow(2.0, u) - 1.0;
    for (std::size_t k = 1; k <= m.size(); ++k) {
        const double ek = std::pow(m.values()[k - 1], omega);
        out.increment_sum += power_increment(k, u) * ek;
        out.two_power += (k == 1 ? 1.0 : two_coeff) * ek;
        out.linear += (k == 1 ? 1.0 : u) * ek;
        out.plain_sum += ek;
    }
    return out;
}

SandwichInputs sandwich_inputs(const StateVector& psi) {
    if (psi.n_qubits() < 4)
        throw std::invalid_argument("partition sandwich: requires at least 4 qubits");

    const auto conc_A = pairwise_measures(psi, 0, MeasureKind::concurrence);
    const auto conc_B1 = pairwise_measures(psi, 1, MeasureKind::concurrence);
    const auto coa_A = pairwise_measures(psi, 0, MeasureKind::coa);
    const auto coa_B1 = pairwise_measures(psi, 1, MeasureKind::coa);

    auto sum_sq = [](const MeasureVector& mv) {
        double s = 0.0;
        for (double v : mv.values) s += v * v;
        return s;
    };

    return SandwichInputs{sum_sq(conc_A), sum_sq(conc_B1),
                          OrderedMeasures::from_measures(coa_A, 2.0),
                          OrderedMeasures::from_measures(coa_B1, 2.0)};
}

namespace {

void check_omega_unit(double omega) {
    if (!(omega >= 0.0 && omega <= 2.0))
        throw std::invalid_argument("partition sandwich: require 0 <= omega <= 2");
}

double lower_from(double sq_a, double sq_b1, double xi_a, double xi_b1, double omega,
                  bool clamp_zero) {
    const double arg1 = std::pow(sq_a, omega / 2.0) - xi_b1;
    const double arg2 = std::pow(sq_b1, omega / 2.0) - xi_a;
    const double m = std::max(arg1, arg2);
    return clamp_zero ? std::max(m, 0.0) : m;
}

}  // namespace

PartitionBoundReport partition_sandwich(const SandwichInputs& in, double omega) {
    check_omega_unit(omega);
    PartitionBoundReport rep;
    rep.omega = omega;
    rep.dropped_A = in.coa_A.dropped();
    rep.dropped_B1 = in.coa_B1.dropped();
    rep.xi_A = polygamy_upper_low(in.coa_A, omega);
    rep.xi_B1 = polygamy_upper_low(in.coa_B1, omega);
    rep.lower = lower_from(in.conc_sq_A, in.conc_sq_B1, rep.xi_A, rep.xi_B1, omega, true);
    rep.upper = rep.xi_A + rep.xi_B1;

    const auto comp = sandwich_competitors(in, omega);
    rep.z = {rep.lower, comp.z2, comp.z3, comp.z4};
    rep.t = {rep.upper, comp.t2, comp.t3, comp.t4};
    return rep;
}

PartitionBoundReport partition_sandwich(const StateVector& psi, double omega) {
    return partition_sandwich(sandwich_inputs(psi), omega);
}

SandwichCompetitors sandwich_competitors(const SandwichInputs& in, double omega) {
    check_omega_unit(omega);
    const auto la = polygamy_chain_low(in.coa_A, omega);
    const auto lb = polygamy_chain_low(in.coa_B1, omega);
    // The weaker-level analogues keep the two-argument max but not the zero
    // clamp; they can go negative, as the worked comparisons do.
    SandwichCompetitors out{};
    out.z2 = lower_from(in.conc_sq_A, in.conc_sq_B1, la.increment_sum, lb.increment_sum, omega, false);
    out.z3 = lower_from(in.conc_sq_A, in.conc_sq_B1, la.two_power, lb.two_power, omega, false);
    out.z4 = lower_from(in.conc_sq_A, in.conc_sq_B1, la.linear, lb.linear, omega, false);
    out.t2 = la.increment_sum + lb.increment_sum;
    out.t3 = la.two_power + lb.two_power;
    out.t4 = la.linear + lb.linear;
    return out;
}

SandwichCompetitors sandwich_competitors(const StateVector& psi, double omega) {
    return sandwich_competitors(sandwich_inputs(psi), omega);
}

const std::vector<double>* BoundCurve::family(std::string_view name) const {
    for (const auto& [fname, values] : families)
        if (fname == name) return &values;
    return nullptr;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t points) {
    if (points < 2) throw std::invalid_argument("linear_grid: need at least 2 points");
    if (!(hi > lo)) throw std::invalid_argument("linear_grid: require hi > lo");
    std::vector<double> g(points);
    const double step = (hi - lo) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) g[i] = lo + step * static_cast<double>(i);
    g.back() = hi;
    return g;
}

BoundCurve bound_curve(const OrderedMeasures& m, BoundRegime regime,
                       const std::vector<double>& grid, double s,
                       std::optional<double> independent_measure) {
    BoundCurve curve;
    curve.grid = grid;
    std::vector<double> ours, l2, l3, l4, ind;
    ours.reserve(grid.size());

    for (double e : grid) {
        switch (regime) {
            case BoundRegime::monogamy_low: {
                ours.push_back(monogamy_lower(m, BoundParams{e, m.base_exponent(), s}));
                const auto lv = monogamy_competitors(m, e);
                l2.push_back(lv.level2);
                l3.push_back(lv.level3);
                l4.push_back(lv.level4);
                break;
            }
            case BoundRegime::polygamy_high: {
                ours.push_back(polygamy_upper_high(m, BoundParams{e, m.base_exponent(), s}));
                const auto lv = polygamy_competitors_high(m, e);
                l2.push_back(lv.level2);
                l3.push_back(lv.level3);
                l4.push_back(lv.level4);
                break;
            }
            case BoundRegime::polygamy_low: {
                ours.push_back(polygamy_upper_low(m, e));
                const auto lv = polygamy_chain_low(m, e);
                l2.push_back(lv.increment_sum);
                l3.push_back(lv.two_power);
                l4.push_back(lv.linear);
                break;
            }
        }
        if (independent_measure) ind.push_back(std::pow(*independent_measure, e));
    }

    curve.families.emplace_back("ours", std::move(ours));
    curve.families.emplace_back("level2", std::move(l2));
    curve.families.emplace_back("level3", std::move(l3));
    curve.families.emplace_back("level4", std::move(l4));
    if (independent_measure) curve.families.emplace_back("C_independent", std::move(ind));
    return curve;
}

BoundCurve sandwich_curve(const SandwichInputs& in, const std::vector<double>& grid,
                          std::optional<double> independent_measure) {
    BoundCurve curve;
    curve.grid = grid;
    std::vector<std::vector<double>> cols(8);
    std::vector<double> ind;
    for (double omega : grid) {
        const auto rep = partition_sandwich(in, omega);
        for (std::size_t i = 0; i < 4; ++i) {
            cols[i].push_back(rep.z[i]);
            cols[4 + i].push_back(rep.t[i]);
        }
        if (independent_measure) ind.push_back(std::pow(*independent_measure, omega));
    }
    static const char* names[8] = {"lower_ours", "lower_level2", "lower_level3", "lower_level4",
                                   "upper_ours", "upper_level2", "upper_level3", "upper_level4"};
    for (std::size_t i = 0; i < 8; ++i) curve.families.emplace_back(names[i], std::move(cols[i]));
    if (independent_measure) curve.families.emplace_back("C_independent", std::move(ind));
    return curve;
}

}  // namespace monolab
