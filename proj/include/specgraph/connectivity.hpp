#pragma once

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

namespace detail {

// max number of internally vertex-disjoint s-t paths, s != t, s !~ t.
// Unit-capacity flow on the split-vertex digraph (Menger). Node 2v = v_in,
// 2v+1 = v_out; arcs v_in->v_out (cap 1), u_out->v_in per edge (cap 1).
inline int disjoint_paths(const Graph& g, int s, int t) {
    const int n = g.order();
    const int N = 2 * n;
    struct Arc {
        int to, rev, cap;
    };
    std::vector<std::vector<Arc>> arcs(static_cast<std::size_t>(N));
    auto add_arc = [&](int a, int b, int cap) {
        arcs[static_cast<std::size_t>(a)].push_back({b, static_cast<int>(arcs[static_cast<std::size_t>(b)].size()), cap});
        arcs[static_cast<std::size_t>(b)].push_back({a, static_cast<int>(arcs[static_cast<std::size_t>(a)].size()) - 1, 0});
    };
    for (int v = 0; v < n; ++v) add_arc(2 * v, 2 * v + 1, v == s || v == t ? n : 1);
    for (auto [u, v] : g.edges()) {
        add_arc(2 * u + 1, 2 * v, 1);
        add_arc(2 * v + 1, 2 * u, 1);
    }
    const int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    std::vector<int> prev_node(static_cast<std::size_t>(N)), prev_arc(static_cast<std::size_t>(N));
    while (true) {
        std::fill(prev_node.begin(), prev_node.end(), -1);
        std::queue<int> q;
        q.push(source);
        prev_node[static_cast<std::size_t>(source)] = source;
        while (!q.empty() && prev_node[static_cast<std::size_t>(sink)] < 0) {
            int u = q.front();
            q.pop();
            for (std::size_t i = 0; i < arcs[static_cast<std::size_t>(u)].size(); ++i) {
                const Arc& a = arcs[static_cast<std::size_t>(u)][i];
                if (a.cap > 0 && prev_node[static_cast<std::size_t>(a.to)] < 0) {
                    prev_node[static_cast<std::size_t>(a.to)] = u;
                    prev_arc[static_cast<std::size_t>(a.to)] = static_cast<int>(i);
                    q.push(a.to);
                }
            }
        }
        if (prev_node[static_cast<std::size_t>(sink)] < 0) break;
        for (int v = sink; v != source; v = prev_node[static_cast<std::size_t>(v)]) {
            int u = prev_node[static_cast<std::size_t>(v)];
            Arc& a = arcs[static_cast<std::size_t>(u)][static_cast<std::size_t>(prev_arc[static_cast<std::size_t>(v)])];
            a.cap -= 1;
            arcs[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap += 1;
        }
        ++flow;
    }
    return flow;
}

}  // namespace detail

// minimum vertex cut size; n-1 for complete graphs, 0 when disconnected
inline int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("vertex_connectivity needs n >= 2");
    if (!is_connected(g)) return 0;
    int best = n - 1;
    bool any_pair = false;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            any_pair = true;
            best = std::min(best, detail::disjoint_paths(g, s, t));
        }
    if (!any_pair) return n - 1;  // complete graph convention
    return best;
}

}  // namespace specgraph
