#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "monolab/rng.hpp"

namespace monolab::verify {

/// Outcome of one sampled property run.
struct Report {
    std::string name;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    double tolerance = 0.0;                                     // slack must stay >= tolerance
    double worst_slack = std::numeric_limits<double>::infinity();
    std::string worst_case;                                     // serialized for replay

    bool passed() const { return failures == 0; }
};

/// Per-trial scratch: the trial function reports the slacks it checked and
/// the tuple that produced them.
struct Sample {
    double slack = std::numeric_limits<double>::infinity();
    std::vector<std::pair<const char*, double>> tuple;

    void observe(double s) { slack = std::min(slack, s); }
    void field(const char* name, double v) { tuple.emplace_back(name, v); }
};

using TrialFn = std::function<void(Rng&, Sample&)>;

/// Runs `trials` samples split over 64 fixed logical shards (per-shard seeds
/// derived from `seed`), distributed over at most MONOLAB_THREADS threads.
/// The result is independent of the thread count.
Report run_property(std::string name, std::uint64_t trials, std::uint64_t seed, double tolerance,
                    const TrialFn& fn);

/// Relative slack of the contract lhs >= rhs.
inline double rel_slack(double lhs, double rhs) {
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    return (lhs - rhs) / scale;
}

int thread_cap();

/// Scalar lemma suites; id in {"2.1", "2.2", "3.1", "3.2", "4.1", "4.2"}.
Report lemma_suite(const std::string& id, std::uint64_t trials, std::uint64_t seed);
std::vector<std::string> lemma_ids();

/// Chain-ordering and s-monotonicity suites over random measure vectors.
std::vector<Report> bound_chain_suites(std::uint64_t trials, std::uint64_t seed);

/// Monogamy/polygamy premises for random n-qubit pure states.
Report premise_suite(int n_qubits, std::uint64_t trials, std::uint64_t seed);

/// Every theorem bound evaluated against the true joint-partition
/// concurrence power on random states.
Report end_to_end_suite(int n_qubits, std::uint64_t trials, std::uint64_t seed);

/// Sandwich validity over random W-class draws or Haar 4-qubit states.
Report sandwich_suite(bool w_class, std::uint64_t trials, std::uint64_t seed);

/// Closed-form agreement, CoA dominance, linear-entropy identities.
Report crosscheck_suite(std::uint64_t trials, std::uint64_t seed);

/// Physical-premise and end-to-end suites over random pure states
/// (monogamy/polygamy premises, theorem brackets, sandwich validity,
/// measure cross-checks).
std::vector<Report> premise_suites(std::uint64_t state_trials, std::uint64_t seed);

/// Everything: six lemma suites, chain suites, premise suites.
std::vector<Report> verify_all(std::uint64_t scalar_trials, std::uint64_t state_trials,
                               std::uint64_t seed);

/// One line per report: PASS/FAIL, worst slack, worst-case tuple.
void print_reports(std::ostream& out, const std::vector<Report>& reports);

bool all_passed(const std::vector<Report>& reports);

}  // namespace monolab::verify
