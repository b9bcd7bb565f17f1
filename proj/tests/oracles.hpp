#pragma once

// Brute-force reference routines for cross-checking the library on small
// instances. Kept deliberately independent of the algorithms under test:
// permutation search, subset scans, exhaustive colorings.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "specgraph/graph.hpp"

namespace oracle {

using specgraph::Graph;

inline bool brute_isomorphic(const Graph& a, const Graph& b) {
    const int n = a.order();
    if (n != b.order() || a.size() != b.size()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < n; ++v) da.push_back(a.degree(v));
    for (int v = 0; v < n; ++v) db.push_back(b.degree(v));
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    auto edges = a.edges();
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (db[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] !=
                da[static_cast<std::size_t>(v)])
                ok = false;
        for (auto it = edges.begin(); ok && it != edges.end(); ++it)
            if (!b.has_edge(perm[static_cast<std::size_t>(it->first)],
                            perm[static_cast<std::size_t>(it->second)]))
                ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline bool subset_connected(const Graph& g, unsigned removed_mask) {
    const int n = g.order();
    int start = -1, kept = 0;
    for (int v = 0; v < n; ++v)
        if (!(removed_mask & (1u << v))) {
            if (start < 0) start = v;
            ++kept;
        }
    if (kept <= 1) return true;
    std::vector<int> stack{start};
    unsigned seen = 1u << start;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u)) {
            unsigned bit = 1u << v;
            if ((removed_mask & bit) || (seen & bit)) continue;
            seen |= bit;
            ++reached;
            stack.push_back(v);
        }
    }
    return reached == kept;
}

inline int brute_vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n < 2 || n > 12) throw std::invalid_argument("brute connectivity handles 2 <= n <= 12");
    if (!subset_connected(g, 0)) return 0;
    for (int size = 1; size <= n - 2; ++size) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) != size) continue;
            if (!subset_connected(g, mask)) return size;
        }
    }
    return n - 1;
}

inline bool brute_bipartite(const Graph& g) {
    const int n = g.order();
    if (n > 16) throw std::invalid_argument("brute bipartiteness handles n <= 16");
    auto edges = g.edges();
    for (unsigned colors = 0; colors < (1u << n); ++colors) {
        bool ok = true;
        for (auto [u, v] : edges)
            if (((colors >> u) & 1u) == ((colors >> v) & 1u)) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return n == 0;
}

// every connected graph on n labeled vertices, one per edge subset
inline std::vector<Graph> all_connected_labeled(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("labeled scan handles 1 <= n <= 6");
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<Graph> out;
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask & (1u << i)) edges.push_back(slots[i]);
        Graph g = Graph::build(n, edges);
        if (specgraph::is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

inline Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < p) edges.emplace_back(u, v);
        Graph g = Graph::build(n, edges);
        if (specgraph::is_connected(g)) return g;
    }
    throw std::runtime_error("random connected graph: too many rejections");
}

inline Graph relabeled(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Graph::build(g.order(), edges);
}

inline Graph random_relabeling(std::mt19937_64& rng, const Graph& g) {
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabeled(g, perm);
}

}  // namespace oracle
