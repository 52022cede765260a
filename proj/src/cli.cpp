#include "subthresh/cli.hpp"

#include "subthresh/acceptance.hpp"
#include "subthresh/census.hpp"
#include "subthresh/error.hpp"
#include "subthresh/families.hpp"
#include "subthresh/graph_io.hpp"
#include "subthresh/json_out.hpp"
#include "subthresh/mc.hpp"
#include "subthresh/random.hpp"
#include "subthresh/spread.hpp"
#include "subthresh/thresholds.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace subthresh {

namespace {

struct Config {
    std::uint64_t seed = 0;
    int threads = 0;
    std::string format;
    std::string output;

    std::string graph_path;
    int n = 0;
    bool connected_only = false;
    int edge_cap = 24;
    bool empirical = false;
    std::uint64_t samples = 0;
    bool exact = false;
    std::string oracle = "generic";
    double tol = 0;
    std::string kind;
    int param = 0;
    std::string n_list;
    bool with_pc = false;
    std::string suite = "all";
    bool calibrate = false;
    std::string golden_dir;
};

std::string resolved_format(const Config& cfg, const std::string& fallback, bool csv_allowed) {
    const std::string f = cfg.format.empty() ? fallback : cfg.format;
    if (f == "csv" && !csv_allowed) throw_input("csv output is only available for the family scaling table");
    return f;
}

std::string census_text(std::span<const SubgraphClass> census) {
    std::ostringstream s;
    s << "edges vertices multiplicity aut canonical_key\n";
    for (const auto& c : census) {
        s << c.edge_count << ' ' << c.vertex_count << ' ' << c.multiplicity << ' ' << c.aut_count << ' '
          << c.canonical.hex() << '\n';
    }
    s << "classes " << census.size() << ", multiplicity sum " << multiplicity_sum(census) << '\n';
    return s.str();
}

std::string threshold_text(const ThresholdReport& r) {
    std::ostringstream s;
    s << std::setprecision(17);
    s << "n " << r.n << "\np_E " << r.p_expectation << "\np_tilde_E " << r.p_modified << '\n';
    for (const auto& w : r.witnesses_modified) {
        s << "witness p_tilde_E: " << w.edge_count << " edges, key " << w.canonical.hex() << '\n';
    }
    for (const auto& w : r.witnesses_expectation) {
        s << "witness p_E: " << w.edge_count << " edges, key " << w.canonical.hex() << '\n';
    }
    return s.str();
}

std::string estimate_text(const PcEstimate& e) {
    std::ostringstream s;
    s << std::setprecision(17);
    s << "method " << to_string(e.method) << "\np_hat " << e.p_hat << "\nci " << e.ci_low << ' ' << e.ci_high << '\n';
    for (const auto& p : e.probes) s << "probe p=" << p.p << ' ' << p.successes << '/' << p.samples << '\n';
    if (e.low_confidence) s << "low confidence: a probe reached the sample cap undecided\n";
    return s.str();
}

std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() || v < 1) throw_input("--n-list entry '" + item + "' is not a positive integer");
        out.push_back(v);
    }
    if (out.empty()) throw_input("--n-list is empty");
    return out;
}

std::string cmd_census(const Config& cfg) {
    const Graph h = read_graph_file(cfg.graph_path);
    const auto census =
        subgraph_census(h, {.connected_only = cfg.connected_only, .edge_cap = cfg.edge_cap, .threads = cfg.threads});
    const std::string f = resolved_format(cfg, "json", false);
    if (f == "text") return census_text(census);
    return dump_json(census_json(census)) + '\n';
}

std::string cmd_thresholds(const Config& cfg) {
    const Graph h = read_graph_file(cfg.graph_path);
    const auto census = subgraph_census(h, {.edge_cap = cfg.edge_cap, .threads = cfg.threads});
    const auto report = compute_thresholds(h, cfg.n, census);
    const std::string f = resolved_format(cfg, "json", false);
    if (f == "text") return threshold_text(report);
    return dump_json(threshold_json(report)) + '\n';
}

std::string cmd_spread(const Config& cfg) {
    const Graph h = read_graph_file(cfg.graph_path);
    const auto census = subgraph_census(h, {.edge_cap = cfg.edge_cap, .threads = cfg.threads});
    const auto report = compute_thresholds(h, cfg.n, census);
    const auto cert = verify_spread_certificate(h, cfg.n, census, report);
    Json j = certificate_json(cert);
    std::ostringstream text;
    text << std::setprecision(17) << "r_claimed " << cert.r_claimed << "\nr_star " << cert.r_star << "\npass "
         << (cert.pass ? "true" : "false") << '\n';
    if (cfg.empirical) {
        const std::uint64_t samples = cfg.samples == 0 ? 10000 : cfg.samples;
        Json rows = Json::array();
        for (std::size_t i = 0; i < census.size(); ++i) {
            const auto& c = census[i];
            const double exact = std::exp(log_of(c.multiplicity) - copies_in_complete(c.representative, cfg.n).log_value);
            const auto rate = empirical_containment_rate(h, cfg.n, c.representative.with_order(cfg.n), samples,
                                                         stream_key(cfg.seed, 0, i), cfg.threads);
            const double se = std::sqrt(exact * (1 - exact) / static_cast<double>(samples));
            Json row = Json::object();
            row["canonical_key"] = c.canonical.hex();
            row["edge_count"] = c.edge_count;
            row["exact"] = exact;
            row["rate"] = rate.rate;
            row["standard_error"] = rate.standard_error;
            row["samples"] = samples;
            row["within_3_se"] = std::abs(rate.rate - exact) <= 3 * se;
            text << "J " << c.canonical.hex() << " exact " << exact << " empirical " << rate.rate << '\n';
            rows.push_back(std::move(row));
        }
        j["empirical"] = std::move(rows);
    }
    const std::string f = resolved_format(cfg, "json", false);
    if (f == "text") return text.str();
    return dump_json(j) + '\n';
}

std::string cmd_estimate(const Config& cfg) {
    const Graph h = read_graph_file(cfg.graph_path);
    PcEstimate est;
    if (cfg.exact) {
        est = exact_pc(h, cfg.n, cfg.tol > 0 ? cfg.tol : 1e-12);
    } else {
        EstimateOptions mc;
        if (cfg.samples != 0) mc.samples_per_probe = cfg.samples;
        if (cfg.tol > 0) mc.tol = cfg.tol;
        mc.seed = cfg.seed;
        mc.oracle = parse_oracle_kind(cfg.oracle);
        mc.threads = cfg.threads;
        est = estimate_pc(h, cfg.n, mc);
    }
    const std::string f = resolved_format(cfg, "json", false);
    if (f == "text") return estimate_text(est);
    return dump_json(estimate_json(est)) + '\n';
}

std::string cmd_family(const Config& cfg) {
    const FamilyKind kind = parse_family_kind(cfg.kind);
    const std::vector<int> ns = parse_n_list(cfg.n_list);
    ScalingOptions options;
    options.param = cfg.param;
    options.with_pc = cfg.with_pc;
    options.mc.seed = cfg.seed;
    options.mc.threads = cfg.threads;
    if (cfg.samples != 0) options.mc.samples_per_probe = cfg.samples;
    const auto rows = scaling_table(kind, ns, options);
    const std::string f = resolved_format(cfg, "json", true);
    if (f == "csv" || f == "text") return scaling_csv(rows);
    return dump_json(scaling_json(rows)) + '\n';
}

int cmd_verify(const Config& cfg, std::string& result) {
    AcceptanceOptions options;
    options.seed = cfg.seed;
    options.threads = cfg.threads;
    options.calibrate = cfg.calibrate;
    options.golden_dir = cfg.golden_dir;
    const std::vector<int> ids = suite_criteria(cfg.suite);
    const std::string f = resolved_format(cfg, "text", false);
    AcceptanceRunner runner(options);
    int failures = 0;
    if (f == "text") {
        std::ostringstream s;
        failures = runner.run_suite(cfg.suite, s);
        s << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
        result = s.str();
    } else {
        Json rows = Json::array();
        for (int id : ids) {
            const CriterionResult r = runner.run(id);
            failures += r.pass ? 0 : 1;
            Json row = Json::object();
            row["criterion"] = r.id;
            row["name"] = r.name;
            row["pass"] = r.pass;
            row["detail"] = r.detail;
            row["budget_seconds"] = r.budget_seconds;
            rows.push_back(std::move(row));
        }
        result = dump_json(rows) + '\n';
    }
    return failures == 0 ? kExitOk : kExitAcceptance;
}

void report_error(std::ostream& err, std::string_view code, const std::string& message) {
    err << "ERROR " << code << ": " << message << '\n';
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Expectation thresholds, spread certificates and critical probabilities of subgraph patterns in "
                 "G(n,p).",
                 "subthresh"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", cfg.seed, "random seed (default 0)");
    app.add_option("--threads", cfg.threads, "worker threads (default: SUBTHRESH_THREADS or all cores)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--output", cfg.output, "write the result to this file instead of stdout");

    auto* census = app.add_subcommand("census", "isomorphism classes of nonempty edge subsets");
    census->add_option("--graph", cfg.graph_path, "edge-list or graph6 file")->required();
    census->add_flag("--connected-only", cfg.connected_only, "connected classes only (lower bound on thresholds)");
    census->add_option("--edge-cap", cfg.edge_cap, "largest e(H) for exhaustive enumeration")->capture_default_str();

    auto* thresholds = app.add_subcommand("thresholds", "p_E and p_tilde_E for a pattern in K_n");
    thresholds->add_option("--graph", cfg.graph_path, "edge-list or graph6 file")->required();
    thresholds->add_option("--n", cfg.n, "ambient order")->required();
    thresholds->add_option("--edge-cap", cfg.edge_cap, "largest e(H) for exhaustive enumeration")->capture_default_str();

    auto* spread = app.add_subcommand("spread", "R-spread certificate for R = 1/(2 p_tilde_E)");
    spread->add_option("--graph", cfg.graph_path, "edge-list or graph6 file")->required();
    spread->add_option("--n", cfg.n, "ambient order")->required();
    spread->add_flag("--empirical", cfg.empirical, "also sample containment rates for every class");
    spread->add_option("--samples", cfg.samples, "samples per class (default 10000)");
    spread->add_option("--edge-cap", cfg.edge_cap, "largest e(H) for exhaustive enumeration")->capture_default_str();

    auto* estimate = app.add_subcommand("estimate-pc", "critical probability p_c by exact bisection or Monte Carlo");
    estimate->add_option("--graph", cfg.graph_path, "edge-list or graph6 file")->required();
    estimate->add_option("--n", cfg.n, "ambient order")->required();
    estimate->add_flag("--exact", cfg.exact, "exact polynomial bisection (n <= 7)");
    estimate->add_option("--samples", cfg.samples, "samples per probe (default 2000)");
    estimate->add_option("--oracle", cfg.oracle, "generic, hamiltonian-cycle, perfect-matching or clique")
        ->capture_default_str();
    estimate->add_option("--tol", cfg.tol, "bisection tolerance (default 5e-3, exact 1e-12)");

    auto* family_cmd = app.add_subcommand("family", "scaling table for a structured family");
    family_cmd->add_option("--kind", cfg.kind, "cycle, matching, clique, path or star")->required();
    family_cmd->add_option("--param", cfg.param, "family size; 0 spans K_n (cycle, matching)")->capture_default_str();
    family_cmd->add_option("--n-list", cfg.n_list, "comma-separated ambient orders")->required();
    family_cmd->add_flag("--with-pc", cfg.with_pc, "add Monte Carlo p_c columns");
    family_cmd->add_option("--samples", cfg.samples, "samples per probe for p_c (default 2000)");

    auto* verify = app.add_subcommand("verify", "run acceptance criteria and print pass/fail per criterion");
    verify->add_option("--suite", cfg.suite, "all, fast, or criterion ids such as 3 or 1,4,7")->capture_default_str();
    verify->add_flag("--calibrate", cfg.calibrate, "rewrite the golden Hamiltonian band");
    verify->add_option("--golden-dir", cfg.golden_dir, "directory holding hamiltonian_band.json");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        report_error(err, error_code(ErrorKind::input), e.what());
        err << app.help();
        return kExitInput;
    }

    try {
        std::string result;
        int code = kExitOk;
        if (census->parsed()) {
            result = cmd_census(cfg);
        } else if (thresholds->parsed()) {
            result = cmd_thresholds(cfg);
        } else if (spread->parsed()) {
            result = cmd_spread(cfg);
        } else if (estimate->parsed()) {
            result = cmd_estimate(cfg);
        } else if (family_cmd->parsed()) {
            result = cmd_family(cfg);
        } else {
            code = cmd_verify(cfg, result);
        }
        if (cfg.output.empty()) {
            out << result;
        } else {
            std::ofstream file(cfg.output, std::ios::binary);
            if (!file || !(file << result)) throw_input("cannot write output file '" + cfg.output + "'");
        }
        return code;
    } catch (const Error& e) {
        report_error(err, error_code(e.kind()), e.what());
        return e.kind() == ErrorKind::capacity ? kExitCapacity : kExitInput;
    } catch (const std::exception& e) {
        report_error(err, "internal_error", e.what());
        return kExitInput;
    }
}

} // namespace subthresh
