#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace specgraph {

// Simple undirected graph on dense integer labels 0..n-1.
// Immutable after construction; rewiring builds modified copies.
class Graph {
public:
    Graph() = default;

    static Graph build(int n, const std::vector<std::pair<int, int>>& edges) {
        if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
        Graph g;
        g.n_ = n;
        g.adj_.assign(static_cast<std::size_t>(n), {});
        for (const auto& [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("edge endpoint out of range: (" +
                                            std::to_string(u) + "," + std::to_string(v) + ")");
            if (u == v)
                throw std::invalid_argument("self-loop rejected: (" + std::to_string(u) + "," +
                                            std::to_string(v) + ")");
        }
        for (const auto& [u, v] : edges) {
            g.adj_[static_cast<std::size_t>(u)].push_back(v);
            g.adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        g.m_ = 0;
        for (auto& nb : g.adj_) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
            g.m_ += static_cast<long long>(nb.size());
        }
        g.m_ /= 2;
        return g;
    }

    int order() const { return n_; }
    long long size() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    bool has_edge(int u, int v) const {
        const auto& nb = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    int min_degree() const {
        if (n_ == 0) return 0;
        int d = degree(0);
        for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    bool is_regular() const { return n_ == 0 || max_degree() == min_degree(); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    // copy with edge set changed; used by the rewiring module
    Graph rewired(const std::vector<std::pair<int, int>>& removed,
                  const std::vector<std::pair<int, int>>& added) const {
        auto es = edges();
        for (auto [u, v] : removed) {
            auto key = std::minmax(u, v);
            auto it = std::find(es.begin(), es.end(), std::make_pair(key.first, key.second));
            if (it == es.end())
                throw std::invalid_argument("cannot remove absent edge (" + std::to_string(u) +
                                            "," + std::to_string(v) + ")");
            es.erase(it);
        }
        for (auto [u, v] : added) {
            auto key = std::minmax(u, v);
            es.emplace_back(key.first, key.second);
        }
        return build(n_, es);
    }

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;
};

inline std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(source)] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u))
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(v);
            }
    }
    return dist;
}

// component id per vertex, ids dense in discovery order
inline std::vector<int> connected_components(const Graph& g, int* count = nullptr) {
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    int c = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::queue<int> q;
        comp[static_cast<std::size_t>(s)] = c;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u))
                if (comp[static_cast<std::size_t>(v)] < 0) {
                    comp[static_cast<std::size_t>(v)] = c;
                    q.push(v);
                }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

inline bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

// nullopt means disconnected (infinite diameter)
inline std::optional<int> diameter(const Graph& g) {
    if (g.order() == 0) return 0;
    int best = 0;
    for (int s = 0; s < g.order(); ++s) {
        auto dist = bfs_distances(g, s);
        for (int d : dist) {
            if (d < 0) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

struct Bipartition {
    std::vector<int> side;  // 0 or 1 per vertex
    int count(int s) const {
        return static_cast<int>(std::count(side.begin(), side.end(), s));
    }
};

// parts set when bipartite, otherwise odd_cycle holds a witness (vertex
// sequence of odd length, consecutive vertices adjacent, last adjacent to first)
struct BipartitionResult {
    std::optional<Bipartition> parts;
    std::vector<int> odd_cycle;
    bool is_bipartite() const { return parts.has_value(); }
};

inline BipartitionResult bipartition(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (color[static_cast<std::size_t>(v)] < 0) {
                    color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
                    parent[static_cast<std::size_t>(v)] = u;
                    q.push(v);
                } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
                    // walk both BFS paths to the root, splice at the meeting point
                    std::vector<int> pu, pv;
                    for (int w = u; w >= 0; w = parent[static_cast<std::size_t>(w)]) pu.push_back(w);
                    for (int w = v; w >= 0; w = parent[static_cast<std::size_t>(w)]) pv.push_back(w);
                    std::reverse(pu.begin(), pu.end());
                    std::reverse(pv.begin(), pv.end());
                    std::size_t i = 0;
                    while (i + 1 < pu.size() && i + 1 < pv.size() && pu[i + 1] == pv[i + 1]) ++i;
                    BipartitionResult res;
                    for (std::size_t j = i; j < pu.size(); ++j) res.odd_cycle.push_back(pu[j]);
                    for (std::size_t j = pv.size(); j-- > i + 1;) res.odd_cycle.push_back(pv[j]);
                    return res;
                }
            }
        }
    }
    BipartitionResult res;
    res.parts = Bipartition{std::move(color)};
    return res;
}

// all bridges, sorted, endpoints normalized u < v
inline std::vector<std::pair<int, int>> cut_edges(const Graph& g) {
    const int n = g.order();
    std::vector<int> tin(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> out;
    int timer = 0;
    struct Frame {
        int u, parent;
        std::size_t idx = 0;
        bool skipped_parent = false;
    };
    std::vector<Frame> stack;
    for (int s = 0; s < n; ++s) {
        if (tin[static_cast<std::size_t>(s)] >= 0) continue;
        stack.push_back({s, -1});
        tin[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.u);
            if (f.idx < nb.size()) {
                int v = nb[f.idx++];
                if (v == f.parent && !f.skipped_parent) {
                    f.skipped_parent = true;
                    continue;
                }
                if (tin[static_cast<std::size_t>(v)] >= 0) {
                    low[static_cast<std::size_t>(f.u)] = std::min(
                        low[static_cast<std::size_t>(f.u)], tin[static_cast<std::size_t>(v)]);
                } else {
                    tin[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
                    stack.push_back({v, f.u});
                }
            } else {
                int u = f.u;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().u;
                    low[static_cast<std::size_t>(p)] =
                        std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(u)]);
                    if (low[static_cast<std::size_t>(u)] > tin[static_cast<std::size_t>(p)])
                        out.emplace_back(std::min(p, u), std::max(p, u));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct DegreeSequence {
    std::vector<int> combined;  // descending
    // per-side sequences, each descending; smaller side first, ties broken by
    // the lexicographically greater sequence first
    std::optional<std::pair<std::vector<int>, std::vector<int>>> sides;
};

inline DegreeSequence degree_sequence(const Graph& g,
                                      const std::optional<Bipartition>& bip = std::nullopt) {
    DegreeSequence ds;
    for (int v = 0; v < g.order(); ++v) ds.combined.push_back(g.degree(v));
    std::sort(ds.combined.rbegin(), ds.combined.rend());
    if (bip) {
        if (static_cast<int>(bip->side.size()) != g.order())
            throw std::invalid_argument("bipartition size mismatch");
        for (int v = 0; v < g.order(); ++v)
            if (bip->side[static_cast<std::size_t>(v)] != 0 &&
                bip->side[static_cast<std::size_t>(v)] != 1)
                throw std::invalid_argument("bipartition side labels must be 0/1");
        for (auto [u, v] : g.edges())
            if (bip->side[static_cast<std::size_t>(u)] == bip->side[static_cast<std::size_t>(v)])
                throw std::invalid_argument("bipartition inconsistent with an edge");
        std::vector<int> a, b;
        for (int v = 0; v < g.order(); ++v)
            (bip->side[static_cast<std::size_t>(v)] == 0 ? a : b).push_back(g.degree(v));
        std::sort(a.rbegin(), a.rend());
        std::sort(b.rbegin(), b.rend());
        if (a.size() > b.size() || (a.size() == b.size() && a < b)) std::swap(a, b);
        ds.sides = std::make_pair(std::move(a), std::move(b));
    }
    return ds;
}

}  // namespace specgraph
