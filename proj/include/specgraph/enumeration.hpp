#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "specgraph/canonical.hpp"
#include "specgraph/dense_eigen.hpp"
#include "specgraph/error.hpp"
#include "specgraph/families.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/spectral.hpp"

namespace specgraph {

struct ClassConstraints {
    bool connected = true;  // the only supported mode; kept explicit in the descriptor
    bool bipartite = false;
    bool tree = false;
};

struct CatalogEntry {
    Graph graph;  // canonically labeled
    std::string canonical_g6;
    std::uint64_t aut_size = 1;
    double lambda1 = 0.0;
    int max_degree = 0;
    bool regular = false;
};

struct EnumerationRun {
    int n = 0;
    int delta_max = 0;
    ClassConstraints constraints;
    std::vector<CatalogEntry> catalog;  // sorted by canonical form
    long long extensions_tried = 0;
    long long duplicates_rejected = 0;
    double elapsed_ms = 0.0;
    // argmax of lambda1 over the extremal class: irregular members whose max
    // degree equals delta_max exactly (regular members trivially dominate)
    int argmax_index = -1;
    int runner_up_index = -1;
    std::optional<double> argmax_margin;
    bool argmax_unique = false;
    long long extremal_class_size = 0;
};

namespace detail {

inline void enumeration_caps(int n, int delta_max, const ClassConstraints& c) {
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    if (!c.connected) throw std::invalid_argument("only connected classes are enumerable");
    int cap;
    if (c.tree)
        cap = 12;
    else if (c.bipartite && delta_max <= 3)
        cap = 12;
    else
        cap = 9;
    if (n > cap) throw scale_cap_error("enumeration class too large at n = " + std::to_string(n));
}

// neighbor subsets for one extension level: nonempty, degree-capped, and
// monochromatic when a bipartition is supplied
inline std::vector<std::vector<int>> extension_sets(const Graph& g, int delta_max,
                                                    const ClassConstraints& c) {
    std::vector<int> open;  // vertices with degree room
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) < delta_max) open.push_back(v);
    std::vector<std::vector<int>> out;
    if (c.tree) {
        for (int v : open) out.push_back({v});
        return out;
    }
    std::optional<Bipartition> bip;
    if (c.bipartite) {
        auto br = bipartition(g);
        if (!br.parts) return out;  // dead branch; cannot stay bipartite
        bip = *br.parts;
    }
    auto emit_subsets = [&](const std::vector<int>& pool) {
        std::size_t total = std::size_t{1} << pool.size();
        for (std::size_t mask = 1; mask < total; ++mask) {
            if (std::popcount(mask) > delta_max) continue;
            std::vector<int> s;
            for (std::size_t i = 0; i < pool.size(); ++i)
                if (mask & (std::size_t{1} << i)) s.push_back(pool[i]);
            out.push_back(std::move(s));
        }
    };
    if (c.bipartite) {
        std::vector<int> side0, side1;
        for (int v : open)
            (bip->side[static_cast<std::size_t>(v)] == 0 ? side0 : side1).push_back(v);
        emit_subsets(side0);
        emit_subsets(side1);
    } else {
        emit_subsets(open);
    }
    return out;
}

}  // namespace detail

// Exhaustive isomorphism-free catalog of the connected graphs of order n
// with max degree <= delta_max under the given constraints. Grows the class
// one vertex at a time (a connected graph always has a non-cut vertex, so
// every member is reachable), rejecting duplicates by canonical form.
inline EnumerationRun enumerate_class(int n, int delta_max, ClassConstraints constraints) {
    detail::enumeration_caps(n, delta_max, constraints);
    auto t0 = std::chrono::steady_clock::now();
    EnumerationRun run;
    run.n = n;
    run.delta_max = delta_max;
    run.constraints = constraints;

    std::vector<Graph> level = {Graph::build(1, {})};
    std::map<std::string, std::uint64_t> forms;  // canonical graph6 -> |Aut|
    if (n == 1) forms.emplace(canonical_form(level[0]).graph6, 1);
    for (int size = 2; size <= n; ++size) {
        forms.clear();
        for (const Graph& g : level) {
            for (const auto& s : detail::extension_sets(g, delta_max, constraints)) {
                ++run.extensions_tried;
                auto es = g.edges();
                for (int w : s) es.emplace_back(w, size - 1);
                auto form = canonical_form(Graph::build(size, es));
                if (!forms.emplace(form.graph6, form.aut_size).second) ++run.duplicates_rejected;
            }
        }
        level.clear();
        level.reserve(forms.size());
        for (const auto& [g6, aut] : forms) level.push_back(graph6_decode(g6));
    }

    run.catalog.reserve(forms.size());
    for (const auto& [g6, aut] : forms) {  // map order keeps the catalog sorted
        CatalogEntry e;
        e.graph = graph6_decode(g6);
        e.canonical_g6 = g6;
        e.aut_size = aut;
        e.lambda1 = spectral_radius(e.graph).lambda1;
        e.max_degree = e.graph.max_degree();
        e.regular = e.graph.is_regular();
        run.catalog.push_back(std::move(e));
    }

    for (std::size_t i = 0; i < run.catalog.size(); ++i) {
        const auto& e = run.catalog[i];
        if (e.regular || e.max_degree != delta_max) continue;
        ++run.extremal_class_size;
        int idx = static_cast<int>(i);
        if (run.argmax_index < 0 ||
            e.lambda1 > run.catalog[static_cast<std::size_t>(run.argmax_index)].lambda1) {
            run.runner_up_index = run.argmax_index;
            run.argmax_index = idx;
        } else if (run.runner_up_index < 0 ||
                   e.lambda1 > run.catalog[static_cast<std::size_t>(run.runner_up_index)].lambda1) {
            run.runner_up_index = idx;
        }
    }
    if (run.argmax_index >= 0 && run.runner_up_index >= 0) {
        auto& top = run.catalog[static_cast<std::size_t>(run.argmax_index)];
        auto& second = run.catalog[static_cast<std::size_t>(run.runner_up_index)];
        double margin = top.lambda1 - second.lambda1;
        if (margin < 1e-9) {
            // too close to trust iteration error; settle with the dense solver
            top.lambda1 = dense_eigensolve(top.graph).lambda1;
            second.lambda1 = dense_eigensolve(second.graph).lambda1;
            if (second.lambda1 > top.lambda1) {
                std::swap(run.argmax_index, run.runner_up_index);
                margin = -margin;
            } else {
                margin = top.lambda1 - second.lambda1;
            }
        }
        run.argmax_margin = margin;
        run.argmax_unique = margin > 1e-9;
    } else if (run.argmax_index >= 0) {
        run.argmax_unique = true;
    }
    run.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return run;
}

inline EnumerationRun enumerate_trees(int n) {
    ClassConstraints c;
    c.connected = true;
    c.tree = true;
    return enumerate_class(n, n > 1 ? n - 1 : 1, c);
}

// Structural facts that must hold for the spectral-radius argmax over the
// connected irregular subcubic bipartite class.
struct MaximalAudit {
    int n = 0;
    std::string argmax_g6;
    bool degree_pattern_ok = false;      // per-side pattern determined by parity
    bool two_unsaturated = false;        // exactly two vertices of degree < 3
    bool no_cut_edge_at_degree_two = false;
    bool cut_edges_separate_unsaturated = false;
    bool matches_recursive_construction = false;  // isomorphic to build_bn(n)
    std::vector<int> unsaturated;
    std::vector<std::pair<int, int>> cut_edge_list;

    bool all_ok() const {
        return degree_pattern_ok && two_unsaturated && no_cut_edge_at_degree_two &&
               cut_edges_separate_unsaturated && matches_recursive_construction;
    }
};

inline MaximalAudit verify_maximal_structure(const EnumerationRun& run, int delta = 3) {
    if (delta != 3 || !run.constraints.bipartite || run.delta_max != 3 || run.n < 6)
        throw std::invalid_argument("verify_maximal_structure expects a subcubic bipartite run, n >= 6");
    if (run.argmax_index < 0) throw std::invalid_argument("run has no extremal member");
    const Graph& g = run.catalog[static_cast<std::size_t>(run.argmax_index)].graph;
    MaximalAudit audit;
    audit.n = run.n;
    audit.argmax_g6 = run.catalog[static_cast<std::size_t>(run.argmax_index)].canonical_g6;

    auto br = bipartition(g);
    auto ds = degree_sequence(g, br.parts);
    if (ds.sides) {
        int n = run.n;
        std::vector<int> first, second;
        if (n % 2 == 0) {
            first.assign(static_cast<std::size_t>(n / 2 - 1), 3);
            first.push_back(2);
            second = first;
        } else {
            first.assign(static_cast<std::size_t>((n - 1) / 2), 3);
            second.assign(static_cast<std::size_t>((n + 1) / 2 - 2), 3);
            second.push_back(2);
            second.push_back(1);
        }
        audit.degree_pattern_ok = ds.sides->first == first && ds.sides->second == second;
    }

    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) < 3) audit.unsaturated.push_back(v);
    audit.two_unsaturated = audit.unsaturated.size() == 2;

    audit.cut_edge_list = cut_edges(g);
    audit.no_cut_edge_at_degree_two = true;
    for (auto [u, v] : audit.cut_edge_list)
        if (g.degree(u) == 2 || g.degree(v) == 2) audit.no_cut_edge_at_degree_two = false;

    audit.cut_edges_separate_unsaturated = true;
    if (audit.two_unsaturated) {
        for (auto e : audit.cut_edge_list) {
            Graph cut = g.rewired({e}, {});
            auto dist = bfs_distances(cut, audit.unsaturated[0]);
            if (dist[static_cast<std::size_t>(audit.unsaturated[1])] >= 0)
                audit.cut_edges_separate_unsaturated = false;
        }
    } else {
        audit.cut_edges_separate_unsaturated = false;
    }

    audit.matches_recursive_construction =
        canonical_form(g) == canonical_form(build_bn(run.n).graph);
    return audit;
}

// Growth of the spectral gap of the extremal family: n^2 * (3 - lambda1)
// approaches pi^2 from below. Both the raw product and the variant divided
// by delta - 1 are reported.
struct ConjectureRow {
    int n = 0;
    double lambda1 = 0.0;
    double gap = 0.0;               // 3 - lambda1
    double ratio = 0.0;             // n^2 * gap
    double ratio_normalized = 0.0;  // n^2 * gap / (delta - 1)
    bool converged = false;
    long long iterations = 0;
};

inline std::vector<ConjectureRow> conjecture_scan(const std::vector<int>& n_values, int delta = 3) {
    if (delta != 3) throw std::invalid_argument("conjecture_scan covers the subcubic family only");
    std::vector<ConjectureRow> rows;
    rows.reserve(n_values.size());
    for (int n : n_values) {
        if (n < 6) throw std::invalid_argument("conjecture_scan needs n >= 6");
        Graph g = build_bn(n).graph;
        auto sp = spectral_radius(g, 1e-8, 2000000);
        ConjectureRow row;
        row.n = n;
        row.lambda1 = sp.lambda1;
        row.gap = 3.0 - sp.lambda1;
        row.ratio = static_cast<double>(n) * n * row.gap;
        row.ratio_normalized = row.ratio / (delta - 1);
        row.converged = sp.converged;
        row.iterations = sp.iterations;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace specgraph
