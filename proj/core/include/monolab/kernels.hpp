#pragma once

#include <cstddef>
#include <vector>

namespace monolab {

/// Values below this are treated as zero; callers must drop them before
/// building a DecreasingSequence (the sum bounds require strictly positive terms).
inline constexpr double kPositiveThreshold = 1e-12;

/// Positive reals p1 >= p2 >= ... >= pN > 0.
class DecreasingSequence {
public:
    explicit DecreasingSequence(std::vector<double> p);

    /// Sorts descending (ties keep input order) and validates positivity.
    static DecreasingSequence sorted_from(std::vector<double> values);

    std::size_t size() const { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }
    const std::vector<double>& values() const { return p_; }
    double sum() const;

private:
    std::vector<double> p_;
};

/// Admissible interval [lo, 1] for the free parameter s.
struct SRange {
    double lo = 1.0;
    double hi = 1.0;

    bool contains(double s) const { return s >= lo && s <= hi; }
};

/// max over h of h*p_{h+1} / (p_1 + ... + p_h); each ratio is <= 1 since the
/// sequence is nonincreasing. A single-element sequence degenerates to [1, 1].
SRange s_range(const DecreasingSequence& p);

/// The four nested bounds on (1+t)^x.
struct ChainBounds {
    double level1;  // (1+a/s)^(x-1) + (1+s/a)^(x-1) t^x
    double level2;  // level1 at s = 1
    double level3;  // 1 + ((1+a)^x - 1)/a^x * t^x
    double level4;  // 1 + (2^x - 1) t^x
};

/// For t >= a >= 1, 0 <= x <= 1, s in [a/t, 1]:
/// (1+t)^x >= level1 >= level2 >= level3 >= level4.
ChainBounds chain_monogamy(double t, double x, double a, double s);

/// Same four expressions; for x >= 1 all inequalities reverse:
/// (1+t)^x <= level1 <= level2 <= level3 <= level4.
ChainBounds chain_polygamy(double t, double x, double a, double s);

/// Weight of the k-th largest of m terms in the parametric sum bound
/// (1-based k):
///   k <  m : (1+(k-1)/s)^(x-1) * prod_{j=1..m-k} (1+s/(m-j))^(x-1)
///   k == m : (1+(m-1)/s)^(x-1)
double parametric_prefactor(std::size_t k, std::size_t m, double x, double s);

/// Level-3 chain weight: prod_{j=1..m-k} ((m-j+1)^x - 1)/(m-j)^x, 1 for k == m.
double chain_prefactor_level3(std::size_t k, std::size_t m, double x);

/// Level-4 chain weight: (2^x - 1)^(m-k).
double chain_prefactor_level4(std::size_t k, std::size_t m, double x);

/// sum_k parametric_prefactor(k, N, x, s) * p_k^x.
/// For 0 <= x <= 1 and admissible s this is a lower bound on (sum p)^x,
/// exact at x = 1 and for N = 1.
double sum_lower_bound(const DecreasingSequence& p, double x, double s);

/// Same expression for x >= 1; upper bound on (sum p)^x.
double sum_upper_bound(const DecreasingSequence& p, double x, double s);

/// t^x + (1+m)^x - m^x + x m^2/(1+m)^2 (t^(x-1) - m^(x-1)),
/// for t >= m >= 1 and 0 <= x <= 1; sits between (1+t)^x and t^x + (1+m)^x - m^x.
double m_refined_upper(double t, double x, double m);

/// k^u - (k-1)^u with the k = 1 increment pinned to 1 for all u in [0, 1]
/// (right-continuity at u = 0).
double power_increment(std::size_t k, double u);

/// sum_k [k^x - (k-1)^x] p_k^x
///   + x sum_{v>=2} ((v-1)^2/v^2) [tau_v^(x-1) - (v-1)^(x-1)] p_v^x,
/// tau_v = (p_1 + ... + p_{v-1})/p_v. Upper bound on (sum p)^x for 0 <= x <= 1;
/// the corrections are nonpositive since tau_v >= v-1.
double sum_upper_small_x(const DecreasingSequence& p, double x);

}  // namespace monolab
