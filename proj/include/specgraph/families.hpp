#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

enum class Family {
    bn,
    path,
    cycle,
    complete,
    complete_minus_edge,
    complete_bipartite,
    star,
    hypercube,
    petersen,
};

struct FamilySpec {
    Family family = Family::path;
    int n = 0;  // order / dimension / leaf count, by family
    int a = 0;  // first side (complete_bipartite)
    int b = 0;  // second side (complete_bipartite)
};

struct BnGraph {
    Graph graph;
    Bipartition parts;
};

// The extremal subcubic bipartite family. Base case K_{3,3} minus the edge
// (0,3). Odd n: vertex n-1 attaches to the largest-index unsaturated vertex
// of the predecessor (the two choices give isomorphic graphs; this one is
// deterministic). Even n: vertex n-1 attaches to both unsaturated vertices.
inline BnGraph build_bn(int n) {
    if (n < 6) throw std::invalid_argument("build_bn needs n >= 6");
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<int> side(static_cast<std::size_t>(n), 0);
    auto add = [&](int u, int v) {
        edges.emplace_back(u, v);
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    };
    for (int x = 0; x < 3; ++x)
        for (int y = 3; y < 6; ++y)
            if (!(x == 0 && y == 3)) add(x, y);
    for (int v = 0; v < 6; ++v) side[static_cast<std::size_t>(v)] = v < 3 ? 0 : 1;
    for (int k = 7; k <= n; ++k) {
        int v = k - 1;
        std::vector<int> uns;
        for (int u = 0; u < v; ++u)
            if (deg[static_cast<std::size_t>(u)] < 3) uns.push_back(u);
        if (k % 2 == 1) {
            int t = uns.back();
            add(v, t);
            side[static_cast<std::size_t>(v)] = 1 - side[static_cast<std::size_t>(t)];
        } else {
            for (int t : uns) add(v, t);
            side[static_cast<std::size_t>(v)] = 1 - side[static_cast<std::size_t>(uns.front())];
        }
    }
    BnGraph out;
    out.graph = Graph::build(n, edges);
    out.parts = Bipartition{std::move(side)};
    return out;
}

// all vertices of degree < delta, sorted
inline std::vector<int> unsaturated_vertices(const Graph& g, int delta) {
    if (delta < g.max_degree())
        throw std::invalid_argument("unsaturated_vertices: delta below max degree");
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) < delta) out.push_back(v);
    return out;
}

inline Graph build_family(const FamilySpec& spec) {
    std::vector<std::pair<int, int>> edges;
    switch (spec.family) {
        case Family::bn:
            return build_bn(spec.n).graph;
        case Family::path: {
            if (spec.n < 1) throw std::invalid_argument("path needs n >= 1");
            for (int v = 0; v + 1 < spec.n; ++v) edges.emplace_back(v, v + 1);
            return Graph::build(spec.n, edges);
        }
        case Family::cycle: {
            if (spec.n < 3) throw std::invalid_argument("cycle needs n >= 3");
            for (int v = 0; v + 1 < spec.n; ++v) edges.emplace_back(v, v + 1);
            edges.emplace_back(0, spec.n - 1);
            return Graph::build(spec.n, edges);
        }
        case Family::complete: {
            if (spec.n < 1) throw std::invalid_argument("complete needs n >= 1");
            for (int u = 0; u < spec.n; ++u)
                for (int v = u + 1; v < spec.n; ++v) edges.emplace_back(u, v);
            return Graph::build(spec.n, edges);
        }
        case Family::complete_minus_edge: {
            if (spec.n < 3) throw std::invalid_argument("complete_minus_edge needs n >= 3");
            for (int u = 0; u < spec.n; ++u)
                for (int v = u + 1; v < spec.n; ++v)
                    if (!(u == 0 && v == 1)) edges.emplace_back(u, v);
            return Graph::build(spec.n, edges);
        }
        case Family::complete_bipartite: {
            if (spec.a < 1 || spec.b < 1)
                throw std::invalid_argument("complete_bipartite needs both sides >= 1");
            for (int u = 0; u < spec.a; ++u)
                for (int v = 0; v < spec.b; ++v) edges.emplace_back(u, spec.a + v);
            return Graph::build(spec.a + spec.b, edges);
        }
        case Family::star: {
            if (spec.n < 1) throw std::invalid_argument("star needs >= 1 leaf");
            for (int v = 1; v <= spec.n; ++v) edges.emplace_back(0, v);
            return Graph::build(spec.n + 1, edges);
        }
        case Family::hypercube: {
            if (spec.n < 1 || spec.n > 16) throw std::invalid_argument("hypercube dimension out of range");
            int size = 1 << spec.n;
            for (int u = 0; u < size; ++u)
                for (int bit = 0; bit < spec.n; ++bit)
                    if (u < (u ^ (1 << bit))) edges.emplace_back(u, u ^ (1 << bit));
            return Graph::build(size, edges);
        }
        case Family::petersen: {
            edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                     {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                     {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}};
            return Graph::build(10, edges);
        }
    }
    throw std::invalid_argument("unknown family");
}

inline Family family_from_name(const std::string& name) {
    if (name == "bn") return Family::bn;
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "complete") return Family::complete;
    if (name == "complete_minus_edge") return Family::complete_minus_edge;
    if (name == "complete_bipartite") return Family::complete_bipartite;
    if (name == "star") return Family::star;
    if (name == "hypercube") return Family::hypercube;
    if (name == "petersen") return Family::petersen;
    throw std::invalid_argument("unknown family name: " + name);
}

}  // namespace specgraph
