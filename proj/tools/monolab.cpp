// monolab: entanglement measures, parametrized monogamy/polygamy bounds,
// inequality verification, and worked-example reproduction.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "monolab/bounds.hpp"
#include "monolab/measures.hpp"
#include "monolab/report.hpp"
#include "monolab/states.hpp"
#include "monolab/verify.hpp"
#include "monolab/version.hpp"

namespace {

using namespace monolab;

struct GlobalOpts {
    std::uint64_t seed = 20250601;
    std::string out;
    std::string format = "csv";
    std::string command_line;
};

std::ostream& open_output(const GlobalOpts& g, std::ofstream& file) {
    if (g.out.empty()) return std::cout;
    file.open(g.out, std::ios::binary);  // binary keeps LF endings everywhere
    if (!file) throw std::runtime_error("cannot open output file: " + g.out);
    return file;
}

std::vector<double> parse_lambdas(const std::string& csv) {
    std::vector<double> vals;
    std::stringstream ss(csv);
    std::string cell;
    while (std::getline(ss, cell, ',')) vals.push_back(std::stod(cell));
    if (vals.size() != 4)
        throw std::invalid_argument("--lambda expects four comma-separated amplitudes");
    // Same policy as the state-file loader: renormalize small decimal
    // truncation, reject anything worse.
    double n2 = 0.0;
    for (double v : vals) n2 += v * v;
    if (std::abs(n2 - 1.0) > 1e-6)
        throw std::invalid_argument("--lambda: squared amplitudes must sum to 1 within 1e-6");
    for (double& v : vals) v /= std::sqrt(n2);
    return vals;
}

StateVector resolve_state(const std::string& spec, const std::string& lambda_csv) {
    if (spec == "dfs") return decoherence_free_state();
    if (spec == "wclass") {
        if (lambda_csv.empty())
            throw std::invalid_argument("--state wclass requires --lambda l1,l2,l3,l4");
        const auto l = parse_lambdas(lambda_csv);
        return w_class_state(WClassParams(l[0], l[1], l[2], l[3]));
    }
    if (spec.rfind("file:", 0) == 0) return load_state_file(spec.substr(5));
    throw std::invalid_argument("--state must be wclass, dfs, or file:<path>");
}

std::vector<double> parse_grid(const std::string& text) {
    double lo = 0.0, hi = 0.0;
    std::size_t n = 0;
    char c1 = 0, c2 = 0;
    std::istringstream ss(text);
    if (!(ss >> lo >> c1 >> hi >> c2 >> n) || c1 != ':' || c2 != ':')
        throw std::invalid_argument("--grid expects lo:hi:n");
    return linear_grid(lo, hi, n);
}

double resolve_s(const std::string& text, const OrderedMeasures& m) {
    const double lo = m.s_admissible().lo;
    if (text.empty()) return std::min(1.0, lo + 1e-9);  // tightest admissible choice
    if (text == "auto-mid") return 0.5 * (lo + 1.0);
    return std::stod(text);
}

void append_differences(BoundCurve& curve, bool ours_minus_level) {
    const auto* ours = curve.family("ours");
    std::vector<std::pair<std::string, std::vector<double>>> diffs;
    for (const char* level : {"level2", "level3", "level4"}) {
        const auto* lv = curve.family(level);
        std::vector<double> d(ours->size());
        for (std::size_t i = 0; i < d.size(); ++i)
            d[i] = ours_minus_level ? (*ours)[i] - (*lv)[i] : (*lv)[i] - (*ours)[i];
        diffs.emplace_back(std::string("diff_") + level, std::move(d));
    }
    for (auto& d : diffs) curve.families.push_back(std::move(d));
}

void emit_curve(const GlobalOpts& g, const BoundCurve& curve) {
    const auto manifest = RunManifest::make(g.command_line, g.seed);
    std::ofstream file;
    std::ostream& out = open_output(g, file);
    if (g.format == "json")
        write_curve_json(out, curve, manifest);
    else
        write_curve_csv(out, curve, manifest);
}

// ---- measure ----

int run_measure(const GlobalOpts& g, const std::string& state_spec, const std::string& lambda_csv,
                const std::string& anchor_label, const std::string& kind_name) {
    const StateVector psi = resolve_state(state_spec, lambda_csv);
    const int anchor = parse_qubit_label(anchor_label, psi.n_qubits());
    const MeasureKind kind =
        kind_name == "coa" ? MeasureKind::coa : MeasureKind::concurrence;
    const auto mv = pairwise_measures(psi, anchor, kind);

    const auto manifest = RunManifest::make(g.command_line, g.seed);
    std::ofstream file;
    std::ostream& out = open_output(g, file);

    const std::string prefix = kind == MeasureKind::coa ? "Ca_" : "C_";
    if (g.format == "json") {
        nlohmann::ordered_json j;
        j["manifest"] = {{"command", manifest.command_line},
                         {"seed", manifest.seed},
                         {"version", manifest.version},
                         {"timestamp", manifest.timestamp}};
        j["anchor"] = qubit_label(anchor);
        j["kind"] = to_string(kind);
        nlohmann::ordered_json vals;
        for (std::size_t i = 0; i < mv.partners.size(); ++i)
            vals[prefix + qubit_label(anchor) + qubit_label(mv.partners[i])] = mv.values[i];
        j["values"] = vals;
        out << j.dump(2) << "\n";
        return 0;
    }

    out << manifest_comment_block(manifest);
    out << "anchor,kind";
    for (int partner : mv.partners)
        out << "," << prefix << qubit_label(anchor) << qubit_label(partner);
    out << "\n" << qubit_label(anchor) << "," << to_string(kind);
    for (double v : mv.values) out << "," << format_value(v);
    out << "\n";
    return 0;
}

// ---- bounds ----

int run_bounds_family(const GlobalOpts& g, BoundRegime regime, const std::string& state_spec,
                      const std::string& lambda_csv, const std::string& anchor_label,
                      const std::string& s_text, const std::string& grid_text) {
    const StateVector psi = resolve_state(state_spec, lambda_csv);
    const int anchor = parse_qubit_label(anchor_label, psi.n_qubits());
    const MeasureKind kind =
        regime == BoundRegime::monogamy_low ? MeasureKind::concurrence : MeasureKind::coa;
    const auto mv = pairwise_measures(psi, anchor, kind);
    const OrderedMeasures m = OrderedMeasures::from_measures(mv, 2.0);
    if (m.dropped() > 0)
        std::cerr << "warning: dropped " << m.dropped()
                  << " vanishing pairwise measure(s) below 1e-12\n";

    const double s = resolve_s(s_text, m);
    const auto grid = parse_grid(grid_text);
    const double independent = pure_concurrence(psi, PartitionSpec({anchor}, psi.n_qubits()));
    emit_curve(g, bound_curve(m, regime, grid, s, independent));
    return 0;
}

int run_bounds_sandwich(const GlobalOpts& g, const std::string& state_spec,
                        const std::string& lambda_csv, const std::string& grid_text) {
    const StateVector psi = resolve_state(state_spec, lambda_csv);
    const auto in = sandwich_inputs(psi);
    if (in.coa_A.dropped() + in.coa_B1.dropped() > 0)
        std::cerr << "warning: dropped " << in.coa_A.dropped() + in.coa_B1.dropped()
                  << " vanishing pairwise measure(s) below 1e-12\n";
    const auto grid = parse_grid(grid_text);
    const double independent = pure_concurrence(psi, PartitionSpec({0, 1}, psi.n_qubits()));
    emit_curve(g, sandwich_curve(in, grid, independent));
    return 0;
}

// ---- reproduce ----

// Pairwise concurrences as printed in the first worked comparison; used as
// that example's defining input data.
const std::vector<double> kExample1Concurrences = {0.9107, 0.3333, 0.244};

WClassParams example_w_params() {
    return WClassParams(0.75, 0.5, std::sqrt(2.0) / 4.0, 0.25);
}

BoundCurve select_sandwich_side(const BoundCurve& full, bool lower) {
    const std::string prefix = lower ? "lower_" : "upper_";
    BoundCurve out;
    out.grid = full.grid;
    for (const char* name : {"ours", "level2", "level3", "level4"})
        out.families.emplace_back(name, *full.family(prefix + name));
    return out;
}

int run_reproduce(const GlobalOpts& g, const std::string& id) {
    if (id == "ex1") {
        const OrderedMeasures m(kExample1Concurrences, 2.0);
        auto curve = bound_curve(m, BoundRegime::monogamy_low, linear_grid(0.0, 2.0, 81), 0.6);
        append_differences(curve, /*ours_minus_level=*/true);
        emit_curve(g, curve);
        return 0;
    }
    if (id == "ex2") {
        const StateVector psi = w_class_state(example_w_params());
        const auto mv = pairwise_measures(psi, 0, MeasureKind::coa);
        const OrderedMeasures m = OrderedMeasures::from_measures(mv, 2.0);
        const double independent = pure_concurrence(psi, PartitionSpec({0}, 4));
        auto curve =
            bound_curve(m, BoundRegime::polygamy_high, linear_grid(2.0, 6.0, 81), 0.6, independent);
        append_differences(curve, /*ours_minus_level=*/false);
        emit_curve(g, curve);
        return 0;
    }
    if (id == "ex3-lower" || id == "ex3-upper") {
        const bool lower = id == "ex3-lower";
        const StateVector psi = w_class_state(example_w_params());
        const auto in = sandwich_inputs(psi);
        const double independent = pure_concurrence(psi, PartitionSpec({0, 1}, 4));
        const auto full = sandwich_curve(in, linear_grid(0.0, 2.0, 81), independent);
        auto curve = select_sandwich_side(full, lower);
        append_differences(curve, /*ours_minus_level=*/lower);
        curve.families.emplace_back("C_independent", *full.family("C_independent"));
        emit_curve(g, curve);
        return 0;
    }
    throw std::invalid_argument("reproduce: id must be ex1, ex2, ex3-lower or ex3-upper");
}

// ---- verify ----

int run_verify(const GlobalOpts& g, const std::string& lemma, std::uint64_t trials) {
    std::vector<verify::Report> reports;
    if (!lemma.empty()) {
        reports.push_back(verify::lemma_suite(lemma, trials, g.seed));
    } else {
        reports = verify::verify_all(trials, std::min<std::uint64_t>(trials, 2000), g.seed);
    }

    const auto manifest = RunManifest::make(g.command_line, g.seed);
    std::ofstream file;
    std::ostream& out = open_output(g, file);
    out << manifest_comment_block(manifest);
    verify::print_reports(out, reports);
    const bool ok = verify::all_passed(reports);
    out << (ok ? "all properties passed\n" : "PROPERTY FAILURES PRESENT\n");
    return ok ? 0 : 1;
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    GlobalOpts g;
    g.command_line = join_args(argc, argv);

    CLI::App app{"entanglement monogamy/polygamy bound toolkit"};
    app.set_version_flag("--version", std::string(monolab::kVersion));
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", g.seed, "base seed for all sampling");
    app.add_option("--out", g.out, "output file (default: stdout)");
    app.add_option("--format", g.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    std::string state_spec, lambda_csv, anchor = "A", kind = "concurrence";
    std::string s_text, grid_text, lemma;
    std::uint64_t trials = 100000;

    auto* measure = app.add_subcommand("measure", "pairwise entanglement measures");
    measure->add_option("--state", state_spec, "wclass | dfs | file:<path>")->required();
    measure->add_option("--lambda", lambda_csv, "wclass amplitudes l1,l2,l3,l4");
    measure->add_option("--anchor", anchor, "anchor qubit label (A, B1, ...)");
    measure->add_option("--kind", kind, "concurrence|coa")
        ->check(CLI::IsMember({"concurrence", "coa"}));

    auto* bounds = app.add_subcommand("bounds", "bound-family curves over an exponent grid");
    bounds->require_subcommand(1);
    bounds->fallthrough();
    struct FamilyCmd {
        CLI::App* cmd;
        BoundRegime regime;
    };
    std::vector<FamilyCmd> family_cmds;
    const std::pair<const char*, BoundRegime> families[] = {
        {"monogamy", BoundRegime::monogamy_low},
        {"polygamy-high", BoundRegime::polygamy_high},
        {"polygamy-low", BoundRegime::polygamy_low},
    };
    const char* default_grids[] = {"0:2:81", "2:6:81", "0:2:81"};
    for (std::size_t i = 0; i < 3; ++i) {
        auto* c = bounds->add_subcommand(families[i].first);
        c->add_option("--state", state_spec, "wclass | dfs | file:<path>")->required();
        c->add_option("--lambda", lambda_csv, "wclass amplitudes");
        c->add_option("--anchor", anchor, "anchor qubit label");
        if (families[i].second != BoundRegime::polygamy_low)
            c->add_option("--s", s_text, "free parameter: value | auto-mid (default: tightest)");
        c->add_option("--grid", grid_text, std::string("exponent grid lo:hi:n (default ") +
                                               default_grids[i] + ")");
        family_cmds.push_back(FamilyCmd{c, families[i].second});
    }
    auto* sandwich = bounds->add_subcommand("sandwich", "lower/upper sandwich on AB1|rest");
    sandwich->add_option("--state", state_spec, "wclass | dfs | file:<path>")->required();
    sandwich->add_option("--lambda", lambda_csv, "wclass amplitudes");
    sandwich->add_option("--grid", grid_text, "omega grid lo:hi:n (default 0:2:81)");

    auto* verify_cmd = app.add_subcommand("verify", "sampled verification of the scalar lemmas");
    verify_cmd->add_option("--lemma", lemma, "2.1|2.2|3.1|3.2|4.1|4.2 (default: all suites)")
        ->check(CLI::IsMember(verify::lemma_ids()));
    verify_cmd->add_option("--trials", trials, "samples per suite");

    std::string example_id;
    auto* reproduce = app.add_subcommand("reproduce", "reproduce a worked example's curve table");
    reproduce->add_option("id", example_id, "ex1 | ex2 | ex3-lower | ex3-upper")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*measure) return run_measure(g, state_spec, lambda_csv, anchor, kind);
        for (const auto& fc : family_cmds)
            if (*fc.cmd) {
                const std::size_t idx = static_cast<std::size_t>(&fc - family_cmds.data());
                if (grid_text.empty()) grid_text = default_grids[idx];
                return run_bounds_family(g, fc.regime, state_spec, lambda_csv, anchor, s_text,
                                         grid_text);
            }
        if (*sandwich) {
            if (grid_text.empty()) grid_text = "0:2:81";
            return run_bounds_sandwich(g, state_spec, lambda_csv, grid_text);
        }
        if (*verify_cmd) return run_verify(g, lemma, trials);
        if (*reproduce) return run_reproduce(g, example_id);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
