#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monolab/kernels.hpp"
#include "monolab/linalg.hpp"
#include "monolab/measures.hpp"

namespace monolab {

/// Pairwise measure values sorted descending, together with the data the
/// bound constructors need: the admissible s-range of the base-powered
/// sequence and the tau ratios. Entries at or below kPositiveThreshold are
/// dropped (and counted) before sorting.
class OrderedMeasures {
public:
    OrderedMeasures(std::vector<double> raw_values, double base_exponent);

    static OrderedMeasures from_measures(const MeasureVector& mv, double base_exponent);

    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double base_exponent() const { return base_; }
    const SRange& s_admissible() const { return s_admissible_; }

    /// tau_p = (v_1^base + ... + v_{p-1}^base) / v_p^base for p = 2..size();
    /// stored at index p-2. Always >= p-1.
    const std::vector<double>& tau() const { return tau_; }

    std::size_t dropped() const { return dropped_; }

private:
    std::vector<double> values_;
    double base_;
    SRange s_admissible_;
    std::vector<double> tau_;
    std::size_t dropped_ = 0;
};

/// One bound evaluation point: the outer exponent (alpha, beta or omega),
/// the measure's base exponent (gamma or delta) and the free parameter s.
struct BoundParams {
    double exponent;
    double base;
    double s = 1.0;
};

struct ChainLevels {
    double level2;  // the s = 1 specialization
    double level3;
    double level4;
};

/// Parametrized monogamy lower bound for E^alpha of the joint partition,
/// alpha <= base, s in the admissible range.
double monogamy_lower(const OrderedMeasures& m, const BoundParams& p);

/// Chain levels 2-4 of the monogamy comparison; ours >= level2 >= level3 >= level4.
ChainLevels monogamy_competitors(const OrderedMeasures& m, double alpha);

/// Parametrized polygamy upper bound for E_a^beta, beta >= base.
double polygamy_upper_high(const OrderedMeasures& m, const BoundParams& p);

/// Chain levels with the reversed ordering; ours <= level2 <= level3 <= level4.
ChainLevels polygamy_competitors_high(const OrderedMeasures& m, double beta);

/// tau-corrected polygamy upper bound for E_a^omega, 0 <= omega <= base.
double polygamy_upper_low(const OrderedMeasures& m, double omega);

/// The successively weaker upper bounds that follow the tau-corrected one.
struct LowChainLevels {
    double increment_sum;   // sum_k [k^u - (k-1)^u] E_k^omega
    double two_power;       // E_1^omega + (2^u - 1) sum_{k>=2} E_k^omega
    double linear;          // E_1^omega + u sum_{k>=2} E_k^omega
    double plain_sum;       // sum_k E_k^omega
};

LowChainLevels polygamy_chain_low(const OrderedMeasures& m, double omega);

/// Measure data for the AB1|B2..B_{N-1} sandwich: anchor-A and anchor-B1
/// concurrence square sums and CoA sequences.
struct SandwichInputs {
    double conc_sq_A;        // sum_i C^2_{A Bi}
    double conc_sq_B1;       // C^2_{A B1} + sum_{i>=2} C^2_{B1 Bi}
    OrderedMeasures coa_A;   // {C_a(A, Bi)} descending, base 2
    OrderedMeasures coa_B1;  // {C_a(B1, A), C_a(B1, Bi)} descending, base 2
};

SandwichInputs sandwich_inputs(const StateVector& psi);

struct PartitionBoundReport {
    double omega = 0.0;
    double xi_A = 0.0;
    double xi_B1 = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    std::array<double, 4> z{};  // z[0] = lower; z[1..3] replace Xi by weaker chain levels
    std::array<double, 4> t{};  // t[0] = upper
    std::size_t dropped_A = 0;
    std::size_t dropped_B1 = 0;
};

/// Lower/upper sandwich for C^omega on the AB1|rest partition (N >= 4):
///   lower = max{ conc_sq_A^(omega/2) - Xi_B1, conc_sq_B1^(omega/2) - Xi_A, 0 }
///   upper = Xi_A + Xi_B1
/// with Xi_j = polygamy_upper_low over the side-j CoA values (base 2).
PartitionBoundReport partition_sandwich(const StateVector& psi, double omega);
PartitionBoundReport partition_sandwich(const SandwichInputs& in, double omega);

struct SandwichCompetitors {
    double z2, z3, z4;  // lower-bound analogues built from the weaker chain levels
    double t2, t3, t4;  // upper-bound analogues
};

SandwichCompetitors sandwich_competitors(const StateVector& psi, double omega);
SandwichCompetitors sandwich_competitors(const SandwichInputs& in, double omega);

/// Exponent grid -> named bound families, ready for CSV emission.
struct BoundCurve {
    std::vector<double> grid;
    std::vector<std::pair<std::string, std::vector<double>>> families;

    const std::vector<double>* family(std::string_view name) const;
};

std::vector<double> linear_grid(double lo, double hi, std::size_t points);

enum class BoundRegime { monogamy_low, polygamy_high, polygamy_low };

/// Families "ours", "level2", "level3", "level4" over the grid; when
/// `independent_measure` is set, a "C_independent" family holding its
/// grid-point powers is appended.
BoundCurve bound_curve(const OrderedMeasures& m, BoundRegime regime,
                       const std::vector<double>& grid, double s,
                       std::optional<double> independent_measure = std::nullopt);

/// Families "lower_ours", "lower_level2".."lower_level4", "upper_ours",
/// "upper_level2".."upper_level4" [, "C_independent"].
BoundCurve sandwich_curve(const SandwichInputs& in, const std::vector<double>& grid,
                          std::optional<double> independent_measure = std::nullopt);

}  // namespace monolab
