#include "monolab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "monolab/bounds.hpp"
#include "monolab/kernels.hpp"
#include "monolab/measures.hpp"
#include "monolab/report.hpp"
#include "monolab/states.hpp"

namespace monolab::verify {

namespace {

constexpr std::size_t kShards = 64;

struct ShardResult {
    std::uint64_t failures = 0;
    double worst_slack = std::numeric_limits<double>::infinity();
    std::string worst_case;
};

std::string render_tuple(const Sample& s, std::size_t shard, std::uint64_t trial) {
    std::ostringstream os;
    for (const auto& [name, value] : s.tuple) os << name << "=" << format_value(value) << " ";
    os << "(shard " << shard << ", trial " << trial << ")";
    return os.str();
}

}  // namespace

int thread_cap() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("MONOLAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && static_cast<unsigned>(v) < hw) return static_cast<int>(v);
        if (v >= 1) return static_cast<int>(std::min<unsigned>(static_cast<unsigned>(v), hw));
    }
    return static_cast<int>(hw);
}

Report run_property(std::string name, std::uint64_t trials, std::uint64_t seed, double tolerance,
                    const TrialFn& fn) {
    if (trials == 0) throw std::invalid_argument("run_property: trials must be >= 1");

    std::vector<ShardResult> results(kShards);
    std::atomic<std::size_t> next_shard{0};

    auto worker = [&] {
        Sample sample;
        while (true) {
            const std::size_t shard = next_shard.fetch_add(1);
            if (shard >= kShards) break;
            const std::uint64_t shard_trials = trials / kShards + (shard < trials % kShards ? 1 : 0);
            if (shard_trials == 0) continue;
            Rng rng(derive_seed(seed, shard));
            ShardResult& res = results[shard];
            for (std::uint64_t i = 0; i < shard_trials; ++i) {
                sample.slack = std::numeric_limits<double>::infinity();
                sample.tuple.clear();
                fn(rng, sample);
                if (sample.slack < tolerance) ++res.failures;
                if (sample.slack < res.worst_slack) {
                    res.worst_slack = sample.slack;
                    res.worst_case = render_tuple(sample, shard, i);
                }
            }
        }
    };

    const int n_threads = std::min<int>(thread_cap(), static_cast<int>(kShards));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_threads));
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    Report report;
    report.name = std::move(name);
    report.trials = trials;
    report.tolerance = tolerance;
    for (const auto& res : results) {
        report.failures += res.failures;
        if (res.worst_slack < report.worst_slack) {
            report.worst_slack = res.worst_slack;
            report.worst_case = res.worst_case;
        }
    }
    return report;
}

namespace {

// Exponent draws mix the interior with the exact endpoints so the
// equality cases stay covered.
double draw_in(Rng& rng, double lo, double hi) {
    const double u = rng.uniform();
    if (u < 0.02) return lo;
    if (u < 0.04) return hi;
    return rng.uniform(lo, hi);
}

// a >= 1 up to ~10, t >= a up to two decades above.
std::pair<double, double> draw_t_a(Rng& rng) {
    const double a = 1.0 + 9.0 * rng.uniform() * rng.uniform();
    const double t = a * std::pow(100.0, rng.uniform());
    return {t, a};
}

std::vector<double> draw_sequence(Rng& rng, std::size_t max_len) {
    const std::size_t n = 1 + rng.integer(max_len);
    std::vector<double> p(n);
    for (auto& v : p) v = std::exp(2.5 * rng.normal());
    std::sort(p.begin(), p.end(), std::greater<>());
    // occasional ties
    if (n >= 2 && rng.uniform() < 0.05) p[n - 1] = p[n - 2];
    return p;
}

Report lemma_21(std::uint64_t trials, std::uint64_t seed) {
    return run_property("lemma-2.1", trials, seed, -1e-12, [](Rng& rng, Sample& s) {
        const auto [t, a] = draw_t_a(rng);
        const double x = draw_in(rng, 0.0, 1.0);
        const double sp = draw_in(rng, a / t, 1.0);
        const auto b = chain_monogamy(t, x, a, sp);
        const double target = std::pow(1.0 + t, x);
        s.field("t", t);
        s.field("x", x);
        s.field("a", a);
        s.field("s", sp);
        s.observe(rel_slack(target, b.level1));
        s.observe(rel_slack(b.level1, b.level2));
        s.observe(rel_slack(b.level2, b.level3));
        s.observe(rel_slack(b.level3, b.level4));
    });
}

Report lemma_31(std::uint64_t trials, std::uint64_t seed) {
    return run_property("lemma-3.1", trials, seed, -1e-12, [](Rng& rng, Sample& s) {
        const auto [t, a] = draw_t_a(rng);
        const double x = draw_in(rng, 1.0, 6.0);
        const double sp = draw_in(rng, a / t, 1.0);
        const auto b = chain_polygamy(t, x, a, sp);
        const double target = std::pow(1.0 + t, x);
        s.field("t", t);
        s.field("x", x);
        s.field("a", a);
        s.field("s", sp);
        s.observe(rel_slack(b.level1, target));
        s.observe(rel_slack(b.level2, b.level1));
        s.observe(rel_slack(b.level3, b.level2));
        s.observe(rel_slack(b.level4, b.level3));
    });
}

Report lemma_22(std::uint64_t trials, std::uint64_t seed) {
    return run_property("lemma-2.2", trials, seed, -1e-12, [](Rng& rng, Sample& s) {
        const DecreasingSequence p(draw_sequence(rng, 8));
        const double x = draw_in(rng, 0.0, 1.0);
        const double sp = draw_in(rng, s_range(p).lo, 1.0);
        const double bound = sum_lower_bound(p, x, sp);
        s.field("N", static_cast<double>(p.size()));
        s.field("p1", p[0]);
        s.field("pN", p[p.size() - 1]);
        s.field("x", x);
        s.field("s", sp);
        s.observe(rel_slack(std::pow(p.sum(), x), bound));
    });
}

Report lemma_32(std::uint64_t trials, std::uint64_t seed) {
    return run_property("lemma-3.2", trials, seed, -1e-12, [](Rng& rng, Sample& s) {
        const DecreasingSequence p(draw_sequence(rng, 8));
        const double x = draw_in(rng, 1.0, 5.0);
        const double sp = draw_in(rng, s_range(p).lo, 1.0);
        const double bound = sum_upper_bound(p, x, sp);
        s.field("N", static_cast<double>(p.size()));
        s.field("p1", p[0]);
        s.field("pN", p[p.size() - 1]);
        s.field("x", x);
        s.field("s", sp);
        s.observe(rel_slack(bound, std::pow(p.sum(), x)));
    });
}

Report lemma_41(std::uint64_t trials, std::uint64_t seed) {
    return run_property("lemma-4.1", trials, seed, -1e-12, [](Rng& rng, Sample& s) {
        const double m = 1.0 + 9.0 * rng.uniform() * rng.uniform();
        const double t = m * std::pow(100.0, rng.uniform());
        const double x = draw_in(rng, 0.0, 1.0);
        const double refined = m_refined_upper(t, x, m);
        const double tx = std::pow(t, x);
        const double plain = tx + std::pow(1.0 + m, x) - std::pow(m, x);
        s.field("t", t);
        s.field("x", x);
        s.field("m", m);
        s.observe(rel_slack(refined, std::pow(1.0 + t, x)));
        s.observe(rel_slack(plain, refined));
        s.observe(rel_slack(tx + std::pow(2.0, x) - 1.0, plain));
        s.observe(rel_slack(tx + x, tx + std::pow(2.0, x) - 1.0));
        s.observe(rel_slack(tx + 1.0, tx + x));
    });
}

Report lemma_42(std::uint64_t trials, std::uint64_t seed) {
    return run_property("lemma-4.2", trials, seed, -1e-12, [](Rng& rng, Sample& s) {
        const DecreasingSequence p(draw_sequence(rng, 8));
        const double x = draw_in(rng, 0.0, 1.0);
        const double bound = sum_upper_small_x(p, x);
        double increments = 0.0;
        double prefix = 0.0;
        for (std::size_t v = 1; v <= p.size(); ++v) {
            increments += power_increment(v, x) * std::pow(p[v - 1], x);
            if (v >= 2) s.observe(prefix / p[v - 1] - static_cast<double>(v - 1));  // tau_v >= v-1
            prefix += p[v - 1];
        }
        s.field("N", static_cast<double>(p.size()));
        s.field("p1", p[0]);
        s.field("pN", p[p.size() - 1]);
        s.field("x", x);
        s.observe(rel_slack(bound, std::pow(p.sum(), x)));
        s.observe(rel_slack(increments, bound));
    });
}

std::vector<double> draw_measures(Rng& rng, std::size_t max_len) {
    const std::size_t n = 1 + rng.integer(max_len);
    std::vector<double> v(n);
    for (auto& m : v) m = 0.01 + 0.99 * rng.uniform();
    return v;
}

Report chain_suite_monogamy(std::uint64_t trials, std::uint64_t seed) {
    return run_property("bounds-monogamy-chain", trials, seed, -1e-12, [](Rng& rng, Sample& s) {
        const OrderedMeasures m(draw_measures(rng, 7), 2.0);
        const double alpha = draw_in(rng, 0.0, 2.0);
        const double sp = draw_in(rng, m.s_admissible().lo, 1.0);
        const double ours = monogamy_lower(m, BoundParams{alpha, 2.0, sp});
        const auto lv = monogamy_competitors(m, alpha);
        s.field("M", static_cast<double>(m.size()));
        s.field("alpha", alpha);
        s.field("s", sp);
        s.observe(rel_slack(ours, lv.level2));
        s.observe(rel_slack(lv.level2, lv.level3));
        s.observe(rel_slack(lv.level3, lv.level4));
    });
}

Report chain_suite_polygamy_high(std::uint64_t trials, std::uint64_t seed) {
    return run_property("bounds-polygamy-high-chain", trials, seed, -1e-12, [](Rng& rng, Sample& s) {
        const OrderedMeasures m(draw_measures(rng, 7), 2.0);
        const double beta = draw_in(rng, 2.0, 6.0);
        const double sp = draw_in(rng, m.s_admissible().lo, 1.0);
        const double ours = polygamy_upper_high(m, BoundParams{beta, 2.0, sp});
        const auto lv = polygamy_competitors_high(m, beta);
        s.field("M", static_cast<double>(m.size()));
        s.field("beta", beta);
        s.field("s", sp);
        s.observe(rel_slack(lv.level2, ours));
        s.observe(rel_slack(lv.level3, lv.level2));
        s.observe(rel_slack(lv.level4, lv.level3));
    });
}

Report chain_suite_polygamy_low(std::uint64_t trials, std::uint64_t seed) {
    return run_property("bounds-polygamy-low-chain", trials, seed, -1e-12, [](Rng& rng, Sample& s) {
        const OrderedMeasures m(draw_measures(rng, 7), 2.0);
        const double omega = draw_in(rng, 0.0, 2.0);
        const double ours = polygamy_upper_low(m, omega);
        const auto lv = polygamy_chain_low(m, omega);
        s.field("M", static_cast<double>(m.size()));
        s.field("omega", omega);
        s.observe(rel_slack(lv.increment_sum, ours));
        s.observe(rel_slack(lv.two_power, lv.increment_sum));
        s.observe(rel_slack(lv.linear, lv.two_power));
        s.observe(rel_slack(lv.plain_sum, lv.linear));
    });
}

Report monotonicity_suite(std::uint64_t trials, std::uint64_t seed) {
    // Tightening: the monogamy bound does not increase in s (alpha < base),
    // the high polygamy bound does not decrease in s (beta > base).
    return run_property("bounds-s-monotonicity", trials, seed, -1e-12, [](Rng& rng, Sample& s) {
        const OrderedMeasures m(draw_measures(rng, 6), 2.0);
        const double alpha = rng.uniform(0.0, 2.0);
        const double beta = rng.uniform(2.0, 6.0);
        const double lo = m.s_admissible().lo;
        s.field("M", static_cast<double>(m.size()));
        s.field("alpha", alpha);
        s.field("beta", beta);
        s.field("s_lo", lo);
        double prev_mono = 0.0, prev_poly = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double sp = std::min(1.0, lo + (1.0 - lo) * static_cast<double>(i) / 99.0);
            const double mono = monogamy_lower(m, BoundParams{alpha, 2.0, sp});
            const double poly = polygamy_upper_high(m, BoundParams{beta, 2.0, sp});
            if (i > 0) {
                s.observe(rel_slack(prev_mono, mono));
                s.observe(rel_slack(poly, prev_poly));
            }
            prev_mono = mono;
            prev_poly = poly;
        }
    });
}

// ---- premise and end-to-end suites over random pure states ----

constexpr double kPremiseTol = -1e-8;

std::uint64_t draw_state_seed(Rng& rng) { return rng.integer(std::uint64_t{1} << 32); }

}  // namespace

Report premise_suite(int n_qubits, std::uint64_t trials, std::uint64_t seed) {
    const std::string name = "premise-ckw-polygamy-n" + std::to_string(n_qubits);
    return run_property(name, trials, seed, kPremiseTol, [n_qubits](Rng& rng, Sample& s) {
        const std::uint64_t state_seed = draw_state_seed(rng);
        const auto psi = random_pure_state(n_qubits, state_seed);
        const double c = pure_concurrence(psi, PartitionSpec({0}, n_qubits));
        const auto conc = pairwise_measures(psi, 0, MeasureKind::concurrence);
        const auto coa = pairwise_measures(psi, 0, MeasureKind::coa);
        double sum_c2 = 0.0, sum_a2 = 0.0;
        for (double v : conc.values) sum_c2 += v * v;
        for (double v : coa.values) sum_a2 += v * v;
        s.field("n", n_qubits);
        s.field("state_seed", static_cast<double>(state_seed));
        s.observe(c * c - sum_c2);   // gamma = 2 monogamy premise
        s.observe(sum_a2 - c * c);   // delta = 2 polygamy premise
    });
}

Report end_to_end_suite(int n_qubits, std::uint64_t trials, std::uint64_t seed) {
    const std::string name = "end-to-end-bounds-n" + std::to_string(n_qubits);
    return run_property(name, trials, seed, kPremiseTol, [n_qubits](Rng& rng, Sample& s) {
        const std::uint64_t state_seed = draw_state_seed(rng);
        const auto psi = random_pure_state(n_qubits, state_seed);
        const double c = pure_concurrence(psi, PartitionSpec({0}, n_qubits));
        const auto conc = pairwise_measures(psi, 0, MeasureKind::concurrence);
        const auto coa = pairwise_measures(psi, 0, MeasureKind::coa);
        s.field("n", n_qubits);
        s.field("state_seed", static_cast<double>(state_seed));

        bool any_positive = false;
        for (double v : conc.values)
            if (v > kPositiveThreshold) any_positive = true;
        if (any_positive) {
            const OrderedMeasures mc = OrderedMeasures::from_measures(conc, 2.0);
            const double lo = mc.s_admissible().lo;
            for (double alpha : {0.0, 0.5, 1.0, 1.5, 2.0})
                for (double sp : {lo, 0.5 * (lo + 1.0), 1.0})
                    s.observe(std::pow(c, alpha) - monogamy_lower(mc, BoundParams{alpha, 2.0, sp}));
        }

        const OrderedMeasures ma = OrderedMeasures::from_measures(coa, 2.0);
        const double lo = ma.s_admissible().lo;
        for (double beta : {2.0, 3.0, 4.5, 6.0})
            for (double sp : {lo, 0.5 * (lo + 1.0), 1.0})
                s.observe(polygamy_upper_high(ma, BoundParams{beta, 2.0, sp}) - std::pow(c, beta));
        for (double omega : {0.0, 0.5, 1.0, 1.5, 2.0})
            s.observe(polygamy_upper_low(ma, omega) - std::pow(c, omega));
    });
}

Report sandwich_suite(bool w_class, std::uint64_t trials, std::uint64_t seed) {
    const std::string name = w_class ? "sandwich-wclass" : "sandwich-random-n4";
    return run_property(name, trials, seed, kPremiseTol, [w_class](Rng& rng, Sample& s) {
        const std::uint64_t state_seed = draw_state_seed(rng);
        StateVector psi = [&] {
            if (!w_class) return random_pure_state(4, state_seed);
            Rng sub(state_seed);
            double l[4], n2 = 0.0;
            for (auto& v : l) {
                v = 0.05 + 0.95 * sub.uniform();
                n2 += v * v;
            }
            for (auto& v : l) v /= std::sqrt(n2);
            return w_class_state(WClassParams(l[0], l[1], l[2], l[3]));
        }();
        const double c = pure_concurrence(psi, PartitionSpec({0, 1}, 4));
        const auto in = sandwich_inputs(psi);
        s.field("wclass", w_class ? 1.0 : 0.0);
        s.field("state_seed", static_cast<double>(state_seed));
        for (double omega : {0.0, 0.25, 0.5, 1.0, 1.5, 2.0}) {
            const auto rep = partition_sandwich(in, omega);
            const double cw = std::pow(c, omega);
            s.observe(cw - rep.lower);
            s.observe(rep.upper - cw);
            // competitor orderings
            s.observe(rel_slack(rep.z[0], rep.z[1]));
            s.observe(rel_slack(rep.z[1], rep.z[2]));
            s.observe(rel_slack(rep.z[2], rep.z[3]));
            s.observe(rel_slack(rep.t[1], rep.t[0]));
            s.observe(rel_slack(rep.t[2], rep.t[1]));
            s.observe(rel_slack(rep.t[3], rep.t[2]));
        }
    });
}

Report crosscheck_suite(std::uint64_t trials, std::uint64_t seed) {
    // Each check folds its own tolerance into the observed slack.
    return run_property("measures-crosschecks", trials, seed, 0.0, [](Rng& rng, Sample& s) {
        const std::uint64_t state_seed = draw_state_seed(rng);
        s.field("state_seed", static_cast<double>(state_seed));

        // pure two-qubit: spin-flip closed form vs reduced-purity formula
        const auto psi2 = random_pure_state(2, state_seed);
        const double via_mixed = two_qubit_concurrence(density_matrix(psi2));
        const double via_pure = pure_concurrence(psi2, PartitionSpec({0}, 2));
        s.observe(1e-8 - std::abs(via_mixed - via_pure));  // within 1e-8

        // CoA dominates concurrence on a random mixed two-qubit state
        const auto psi4 = random_pure_state(4, state_seed + 1);
        const auto rho = partial_trace(density_matrix(psi4), PartitionSpec({0, 1}, 4));
        s.observe(two_qubit_coa(rho) - two_qubit_concurrence(rho) + 1e-9);

        // 2 T(rho_A) = C^2 on pure bipartitions
        const int n = 2 + static_cast<int>(rng.integer(3));
        const auto psi = random_pure_state(n, state_seed + 2);
        const auto rho_a = partial_trace(density_matrix(psi), PartitionSpec({0}, n));
        const double cc = pure_concurrence(psi, PartitionSpec({0}, n));
        s.observe(1e-9 - std::abs(2.0 * linear_entropy(rho_a) - cc * cc));

        // linear entropy triangle on a two-qubit marginal
        const double t_ab = linear_entropy(rho);
        const double t_a = linear_entropy(partial_trace(rho, PartitionSpec({0}, 2)));
        const double t_b = linear_entropy(partial_trace(rho, PartitionSpec({1}, 2)));
        s.observe(t_ab - std::abs(t_a - t_b) + 1e-8);
        s.observe(t_a + t_b - t_ab + 1e-8);
    });
}

std::vector<std::string> lemma_ids() { return {"2.1", "2.2", "3.1", "3.2", "4.1", "4.2"}; }

Report lemma_suite(const std::string& id, std::uint64_t trials, std::uint64_t seed) {
    if (id == "2.1") return lemma_21(trials, seed);
    if (id == "2.2") return lemma_22(trials, seed);
    if (id == "3.1") return lemma_31(trials, seed);
    if (id == "3.2") return lemma_32(trials, seed);
    if (id == "4.1") return lemma_41(trials, seed);
    if (id == "4.2") return lemma_42(trials, seed);
    throw std::invalid_argument("unknown lemma id: " + id +
                                " (expected 2.1, 2.2, 3.1, 3.2, 4.1 or 4.2)");
}

std::vector<Report> bound_chain_suites(std::uint64_t trials, std::uint64_t seed) {
    std::vector<Report> out;
    out.push_back(chain_suite_monogamy(trials, derive_seed(seed, 101)));
    out.push_back(chain_suite_polygamy_high(trials, derive_seed(seed, 102)));
    out.push_back(chain_suite_polygamy_low(trials, derive_seed(seed, 103)));
    // the 100-point s sweep makes each trial ~200 bound evaluations
    out.push_back(monotonicity_suite(std::max<std::uint64_t>(trials / 100, 10), derive_seed(seed, 104)));
    return out;
}

std::vector<Report> premise_suites(std::uint64_t state_trials, std::uint64_t seed) {
    std::vector<Report> out;
    out.push_back(premise_suite(3, state_trials, derive_seed(seed, 201)));
    out.push_back(premise_suite(4, state_trials, derive_seed(seed, 202)));
    out.push_back(end_to_end_suite(3, state_trials, derive_seed(seed, 203)));
    out.push_back(end_to_end_suite(4, state_trials, derive_seed(seed, 204)));
    out.push_back(sandwich_suite(true, state_trials, derive_seed(seed, 205)));
    out.push_back(sandwich_suite(false, state_trials, derive_seed(seed, 206)));
    out.push_back(crosscheck_suite(state_trials, derive_seed(seed, 207)));
    return out;
}

std::vector<Report> verify_all(std::uint64_t scalar_trials, std::uint64_t state_trials,
                               std::uint64_t seed) {
    std::vector<Report> out;
    for (const auto& id : lemma_ids()) out.push_back(lemma_suite(id, scalar_trials, seed));
    for (auto& r : bound_chain_suites(scalar_trials / 10 + 1, seed)) out.push_back(std::move(r));
    for (auto& r : premise_suites(state_trials, seed)) out.push_back(std::move(r));
    return out;
}

void print_reports(std::ostream& out, const std::vector<Report>& reports) {
    for (const auto& r : reports) {
        out << (r.passed() ? "[PASS] " : "[FAIL] ") << r.name << ": trials=" << r.trials
            << " failures=" << r.failures << " worst_slack=" << format_value(r.worst_slack)
            << " tol=" << format_value(r.tolerance) << "\n";
        out << "       worst: " << r.worst_case << "\n";
    }
}

bool all_passed(const std::vector<Report>& reports) {
    for (const auto& r : reports)
        if (!r.passed()) return false;
    return true;
}

}  // namespace monolab::verify
