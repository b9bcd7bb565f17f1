#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "specgraph/bounds.hpp"
#include "specgraph/csv.hpp"
#include "specgraph/dense_eigen.hpp"
#include "specgraph/enumeration.hpp"
#include "specgraph/error.hpp"
#include "specgraph/families.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/graph6.hpp"
#include "specgraph/parallel.hpp"
#include "specgraph/rewiring.hpp"
#include "specgraph/spectral.hpp"

namespace {

using namespace specgraph;

struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> read_graph6_lines(const std::string& path) {
    std::vector<std::string> lines;
    std::istream* in = &std::cin;
    std::ifstream file;
    if (path != "-") {
        file.open(path);
        if (!file) throw std::invalid_argument("cannot open input: " + path);
        in = &file;
    }
    std::string line;
    while (std::getline(*in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        lines.push_back(line.substr(start));
    }
    return lines;
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output: " + path);
    out << text;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

struct ConstructConfig {
    std::string family;
    int n = 0;
    int a = 0;
    int b = 0;
    std::string format = "graph6";
    std::string out = "-";
};

void run_construct(const ConstructConfig& cfg) {
    FamilySpec spec;
    spec.family = family_from_name(cfg.family);
    spec.n = cfg.n;
    spec.a = cfg.a;
    spec.b = cfg.b;
    Graph g = build_family(spec);
    std::string text;
    if (cfg.format == "graph6") {
        text = graph6_encode(g) + "\n";
    } else {
        text = csv_row({"graph6", "n", "m", "delta"});
        text += csv_row({graph6_encode(g), std::to_string(g.order()), std::to_string(g.size()),
                         std::to_string(g.max_degree())});
    }
    write_text(cfg.out, text);
}

struct SpectrumConfig {
    std::string input;
    double tol = 1e-12;
    long long max_iter = 1000000;
    bool dense = false;
    std::string out = "-";
    int threads = 1;
};

void run_spectrum(const SpectrumConfig& cfg) {
    if (!(cfg.tol > 0.0)) throw std::invalid_argument("--tol must be positive");
    auto lines = read_graph6_lines(cfg.input);
    std::vector<SpectralResult> results(lines.size());
    std::vector<int> orders(lines.size());
    parallel_for(lines.size(), cfg.threads, [&](std::size_t i) {
        Graph g = graph6_decode(lines[i]);
        orders[i] = g.order();
        results[i] = cfg.dense ? dense_eigensolve(g) : spectral_radius(g, cfg.tol, cfg.max_iter);
    });
    std::string text =
        csv_row({"graph6", "n", "lambda1", "iterations", "residual", "converged", "method"});
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& r = results[i];
        text += csv_row({lines[i], std::to_string(orders[i]), csv_double(r.lambda1),
                         std::to_string(r.iterations), csv_double(r.residual),
                         bool_str(r.converged),
                         r.method == SpectralResult::Method::dense_oracle ? "dense_oracle"
                                                                          : "power_shifted"});
    }
    write_text(cfg.out, text);
    for (std::size_t i = 0; i < results.size(); ++i)
        if (!results[i].converged)
            throw convergence_error("eigensolver did not converge on line " + std::to_string(i + 1));
}

struct BoundsConfig {
    std::string input;
    bool all_k = false;
    std::string out = "-";
    int threads = 1;
};

void append_bound_row(std::string& text, const BoundReport& r) {
    std::vector<std::string> fields = {r.id,
                                       std::to_string(r.n),
                                       std::to_string(r.m),
                                       std::to_string(r.delta),
                                       std::to_string(r.k),
                                       r.diam ? std::to_string(*r.diam) : "",
                                       csv_double(r.lambda1),
                                       csv_double(r.true_gap)};
    for (const auto& e : r.entries) {
        fields.push_back(e.applicable ? csv_double(e.value) : "");
        fields.push_back(e.applicable ? bool_str(e.holds) : "na");
    }
    text += csv_row(fields);
}

void run_bounds(const BoundsConfig& cfg) {
    auto lines = read_graph6_lines(cfg.input);
    std::vector<std::vector<BoundReport>> reports(lines.size());
    parallel_for(lines.size(), cfg.threads, [&](std::size_t i) {
        Graph g = graph6_decode(lines[i]);
        BoundReport base = bound_report(g);
        if (cfg.all_k && base.k >= 1) {
            for (int k = 1; k <= base.k; ++k) reports[i].push_back(bound_report(g, k));
        } else {
            reports[i].push_back(std::move(base));
        }
    });
    std::vector<std::string> header = {"graph6", "n", "m", "delta", "k", "D", "lambda1", "true_gap"};
    for (const auto& name : bound_report_names()) {
        header.push_back(name + "_value");
        header.push_back(name + "_holds");
    }
    std::string text = csv_row(header);
    for (const auto& per_graph : reports)
        for (const auto& r : per_graph) append_bound_row(text, r);
    write_text(cfg.out, text);
}

struct VerifyMaximalConfig {
    int n_min = 6;
    int n_max = 12;
    std::string out = "-";
};

void run_verify_maximal(const VerifyMaximalConfig& cfg) {
    if (cfg.n_min < 6 || cfg.n_max < cfg.n_min)
        throw std::invalid_argument("need 6 <= n-min <= n-max");
    std::string text = csv_row({"n", "argmax_graph6", "lambda1", "runner_up_margin",
                                "extremal_class_size", "catalog_size", "degree_pattern_ok",
                                "two_unsaturated", "no_cut_edge_at_degree_two",
                                "cut_edges_separate_unsaturated", "matches_recursive_construction",
                                "all_ok"});
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        ClassConstraints c;
        c.connected = true;
        c.bipartite = true;
        auto run = enumerate_class(n, 3, c);
        auto audit = verify_maximal_structure(run);
        const auto& top = run.catalog[static_cast<std::size_t>(run.argmax_index)];
        text += csv_row({std::to_string(n), audit.argmax_g6, csv_double(top.lambda1),
                         run.argmax_margin ? csv_double(*run.argmax_margin) : "",
                         std::to_string(run.extremal_class_size),
                         std::to_string(run.catalog.size()), bool_str(audit.degree_pattern_ok),
                         bool_str(audit.two_unsaturated),
                         bool_str(audit.no_cut_edge_at_degree_two),
                         bool_str(audit.cut_edges_separate_unsaturated),
                         bool_str(audit.matches_recursive_construction), bool_str(audit.all_ok())});
    }
    write_text(cfg.out, text);
}

struct TreesConfig {
    int n = 9;
    bool compare_bounds = false;
    std::string out = "-";
};

void run_trees(const TreesConfig& cfg) {
    std::string text;
    if (cfg.compare_bounds) {
        auto cmp = remark_comparison_trees(cfg.n);
        text = csv_row({"graph6", "delta", "diameter", "lambda1", "true_gap", "cioaba",
                        "refined_connectivity", "winner"});
        for (const auto& row : cmp.rows) {
            std::string winner = row.winner == ComparisonWinner::first    ? cmp.first_name
                                 : row.winner == ComparisonWinner::second ? cmp.second_name
                                                                          : "tie";
            text += csv_row({row.id, std::to_string(row.delta), std::to_string(row.diameter),
                             csv_double(row.lambda1), csv_double(row.true_gap),
                             csv_double(row.cioaba), csv_double(row.refined), winner});
        }
    } else {
        auto run = enumerate_trees(cfg.n);
        text = csv_row({"graph6", "n", "delta", "diameter", "lambda1", "aut_size"});
        for (const auto& e : run.catalog)
            text += csv_row({e.canonical_g6, std::to_string(cfg.n), std::to_string(e.max_degree),
                             std::to_string(*diameter(e.graph)), csv_double(e.lambda1),
                             std::to_string(e.aut_size)});
    }
    write_text(cfg.out, text);
}

struct ConjectureConfig {
    std::vector<int> n_list;
    std::string out = "-";
};

void run_conjecture(const ConjectureConfig& cfg) {
    if (cfg.n_list.empty()) throw std::invalid_argument("--n-list must not be empty");
    auto rows = conjecture_scan(cfg.n_list);
    std::string text =
        csv_row({"n", "lambda1", "gap", "ratio", "ratio_normalized", "iterations", "converged"});
    for (const auto& r : rows)
        text += csv_row({std::to_string(r.n), csv_double(r.lambda1), csv_double(r.gap),
                         csv_double(r.ratio), csv_double(r.ratio_normalized),
                         std::to_string(r.iterations), bool_str(r.converged)});
    write_text(cfg.out, text);
    for (const auto& r : rows)
        if (!r.converged)
            throw convergence_error("eigensolver did not converge at n = " + std::to_string(r.n));
}

struct HillclimbConfig {
    std::string input;
    std::uint64_t seed = 12345;
    std::string policy = "best";
    int max_steps = 100000;
    std::string trace = "-";
};

void run_hillclimb(const HillclimbConfig& cfg) {
    auto lines = read_graph6_lines(cfg.input);
    if (lines.empty()) throw std::invalid_argument("hillclimb input holds no graph6 line");
    Graph g0 = graph6_decode(lines.front());
    ClimbPolicy policy =
        cfg.policy == "best" ? ClimbPolicy::best_improvement : ClimbPolicy::first_improvement;
    auto trace = hill_climb(g0, cfg.seed, policy, cfg.max_steps);
    std::string text = csv_row({"step", "graph6", "lambda1", "u", "u_prime", "v", "v_prime"});
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& s = trace.steps[i];
        std::vector<std::string> fields = {std::to_string(i), graph6_encode(s.graph),
                                           csv_double(s.lambda1)};
        if (s.move) {
            fields.push_back(std::to_string(s.move->u));
            fields.push_back(std::to_string(s.move->u_prime));
            fields.push_back(std::to_string(s.move->v));
            fields.push_back(std::to_string(s.move->v_prime));
        } else {
            fields.insert(fields.end(), {"", "", "", ""});
        }
        text += csv_row(fields);
    }
    write_text(cfg.trace, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral-gap toolkit for bounded-degree graph classes"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker cap for parallel sections")
        ->check(CLI::PositiveNumber);

    ConstructConfig construct_cfg;
    auto* construct = app.add_subcommand("construct", "emit a named family member");
    construct->add_option("--family", construct_cfg.family, "family name")->required();
    construct->add_option("--n", construct_cfg.n, "order / dimension / leaf count");
    construct->add_option("--a", construct_cfg.a, "first side (complete_bipartite)");
    construct->add_option("--b", construct_cfg.b, "second side (complete_bipartite)");
    construct->add_option("--format", construct_cfg.format, "graph6 or csv")
        ->check(CLI::IsMember({"graph6", "csv"}));
    construct->add_option("--out", construct_cfg.out, "output path or -");

    SpectrumConfig spectrum_cfg;
    auto* spectrum = app.add_subcommand("spectrum", "spectral radius per input graph");
    spectrum->add_option("--input", spectrum_cfg.input, "graph6 lines, path or -")->required();
    spectrum->add_option("--tol", spectrum_cfg.tol, "residual tolerance");
    spectrum->add_option("--max-iter", spectrum_cfg.max_iter, "iteration cap");
    spectrum->add_flag("--dense", spectrum_cfg.dense, "use the dense eigensolver");
    spectrum->add_option("--out", spectrum_cfg.out, "output path or -");

    BoundsConfig bounds_cfg;
    auto* bounds = app.add_subcommand("bounds", "spectral-gap bound report per input graph");
    bounds->add_option("--input", bounds_cfg.input, "graph6 lines, path or -")->required();
    bounds->add_flag("--all-k", bounds_cfg.all_k, "one row per usable connectivity value");
    bounds->add_option("--out", bounds_cfg.out, "output path or -");

    VerifyMaximalConfig verify_cfg;
    auto* verify = app.add_subcommand("verify-maximal",
                                      "exhaustive argmax audit over subcubic bipartite classes");
    verify->add_option("--n-min", verify_cfg.n_min, "smallest order");
    verify->add_option("--n-max", verify_cfg.n_max, "largest order");
    verify->add_option("--out", verify_cfg.out, "output path or -");

    TreesConfig trees_cfg;
    auto* trees = app.add_subcommand("trees", "tree catalog, optionally with bound comparison");
    trees->add_option("--n", trees_cfg.n, "tree order")->required();
    trees->add_flag("--compare-bounds", trees_cfg.compare_bounds,
                    "emit the diameter-vs-connectivity comparison");
    trees->add_option("--out", trees_cfg.out, "output path or -");

    ConjectureConfig conjecture_cfg;
    auto* conjecture = app.add_subcommand("conjecture", "spectral-gap growth table for the extremal family");
    conjecture->add_option("--n-list", conjecture_cfg.n_list, "comma-separated orders")
        ->required()
        ->delimiter(',');
    conjecture->add_option("--out", conjecture_cfg.out, "output path or -");

    HillclimbConfig hill_cfg;
    auto* hill = app.add_subcommand("hillclimb", "eigenvector-guided rewiring ascent");
    hill->add_option("--input", hill_cfg.input, "start graph (first graph6 line), path or -")
        ->required();
    hill->add_option("--seed", hill_cfg.seed, "rng seed (first-improvement order)");
    hill->add_option("--policy", hill_cfg.policy, "best or first")
        ->check(CLI::IsMember({"best", "first"}));
    hill->add_option("--max-steps", hill_cfg.max_steps, "step cap");
    hill->add_option("--trace", hill_cfg.trace, "trace output path or -");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: bad-flags: " << e.what() << "\n";
        return 2;
    }

    try {
        spectrum_cfg.threads = threads;
        bounds_cfg.threads = threads;
        if (construct->parsed()) run_construct(construct_cfg);
        if (spectrum->parsed()) run_spectrum(spectrum_cfg);
        if (bounds->parsed()) run_bounds(bounds_cfg);
        if (verify->parsed()) run_verify_maximal(verify_cfg);
        if (trees->parsed()) run_trees(trees_cfg);
        if (conjecture->parsed()) run_conjecture(conjecture_cfg);
        if (hill->parsed()) run_hillclimb(hill_cfg);
    } catch (const scale_cap_error& e) {
        std::cerr << "error: scale-cap: " << e.what() << "\n";
        return 3;
    } catch (const convergence_error& e) {
        std::cerr << "error: no-convergence: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: bad-input: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
