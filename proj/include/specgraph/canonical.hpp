#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "specgraph/error.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/graph6.hpp"

namespace specgraph {

namespace detail {

// adjacency of a graph on n <= 16 vertices as row bitmasks
struct BitGraph {
    int n = 0;
    std::array<std::uint16_t, 16> row{};

    static BitGraph from(const Graph& g) {
        BitGraph b;
        b.n = g.order();
        for (int u = 0; u < b.n; ++u)
            for (int v : g.neighbors(u)) b.row[static_cast<std::size_t>(u)] |= static_cast<std::uint16_t>(1u << v);
        return b;
    }
};

// Upper-triangle bits in column order (pairs (i,j), i<j, sorted by j then i),
// packed most-significant-first so lexicographic bit order equals numeric
// comparison of the word pair. Matches the graph6 bit order.
using AdjBits = std::array<std::uint64_t, 2>;

inline AdjBits adjacency_bits(const BitGraph& g, const std::array<int, 16>& label_of) {
    AdjBits bits{0, 0};
    int t = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i, ++t) {
            int u = label_of[static_cast<std::size_t>(i)];
            int v = label_of[static_cast<std::size_t>(j)];
            if (g.row[static_cast<std::size_t>(u)] & (1u << v))
                bits[static_cast<std::size_t>(t / 64)] |= 1ull << (63 - t % 64);
        }
    return bits;
}

// ordered partition of the vertex set into cells
struct Partition {
    std::vector<std::vector<int>> cells;

    bool discrete() const {
        for (const auto& c : cells)
            if (c.size() != 1) return false;
        return true;
    }
};

// split every cell by the multiset of neighbor counts into current cells,
// repeating until stable; splitting order depends only on invariant values
inline void refine(const BitGraph& g, Partition& p) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::uint16_t> cell_mask(p.cells.size(), 0);
        for (std::size_t c = 0; c < p.cells.size(); ++c)
            for (int v : p.cells[c]) cell_mask[c] |= static_cast<std::uint16_t>(1u << v);
        std::vector<std::vector<int>> next;
        next.reserve(p.cells.size());
        for (const auto& cell : p.cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            // signature per vertex: neighbor count in every cell
            std::vector<std::pair<std::vector<int>, int>> keyed;
            keyed.reserve(cell.size());
            for (int v : cell) {
                std::vector<int> sig(p.cells.size());
                for (std::size_t c = 0; c < p.cells.size(); ++c)
                    sig[c] = std::popcount(static_cast<unsigned>(
                        g.row[static_cast<std::size_t>(v)] & cell_mask[c]));
                keyed.emplace_back(std::move(sig), v);
            }
            std::sort(keyed.begin(), keyed.end());
            std::size_t start = 0;
            for (std::size_t i = 1; i <= keyed.size(); ++i) {
                if (i == keyed.size() || keyed[i].first != keyed[start].first) {
                    std::vector<int> part;
                    for (std::size_t j = start; j < i; ++j) part.push_back(keyed[j].second);
                    std::sort(part.begin(), part.end());
                    if (part.size() != cell.size()) changed = true;
                    next.push_back(std::move(part));
                    start = i;
                }
            }
        }
        p.cells = std::move(next);
    }
}

struct CanonSearch {
    const BitGraph* g = nullptr;
    bool have_best = false;
    AdjBits best{~0ull, ~0ull};
    std::array<int, 16> best_label_of{};
    std::uint64_t best_count = 0;

    // number of bits fixed once the leading d cells are singletons
    static int prefix_bits(int d) { return d * (d - 1) / 2; }

    // lexicographic comparison of the first `nbits` bits: -1, 0, +1
    static int compare_prefix(const AdjBits& a, const AdjBits& b, int nbits) {
        for (int w = 0; w < 2 && nbits > 0; ++w, nbits -= 64) {
            std::uint64_t mask = nbits >= 64 ? ~0ull : (~0ull << (64 - nbits));
            std::uint64_t x = a[static_cast<std::size_t>(w)] & mask;
            std::uint64_t y = b[static_cast<std::size_t>(w)] & mask;
            if (x != y) return x < y ? -1 : 1;
        }
        return 0;
    }

    // A cell whose members are interchangeable: identical adjacency outside
    // the cell, and complete or empty inside. Permuting such cells never
    // changes the bitstring, so they need no branching.
    bool homogeneous(const std::vector<int>& cell) const {
        std::uint16_t mask = 0;
        for (int v : cell) mask |= static_cast<std::uint16_t>(1u << v);
        std::uint16_t outside0 = g->row[static_cast<std::size_t>(cell[0])] & ~mask;
        int inside0 = std::popcount(static_cast<unsigned>(
            g->row[static_cast<std::size_t>(cell[0])] & mask));
        if (inside0 != 0 && inside0 != static_cast<int>(cell.size()) - 1) return false;
        for (int v : cell) {
            std::uint16_t r = g->row[static_cast<std::size_t>(v)];
            if ((r & ~mask) != outside0) return false;
            if (std::popcount(static_cast<unsigned>(r & mask)) != inside0) return false;
        }
        return true;
    }

    void descend(Partition& p) {
        refine(*g, p);
        int lead = 0;
        while (lead < static_cast<int>(p.cells.size()) &&
               p.cells[static_cast<std::size_t>(lead)].size() == 1)
            ++lead;
        std::array<int, 16> label_of{};
        for (int i = 0; i < lead; ++i)
            label_of[static_cast<std::size_t>(i)] = p.cells[static_cast<std::size_t>(i)][0];
        if (have_best) {
            // partial labeling already worse than the best: dead branch
            AdjBits partial = adjacency_bits(*g, label_of);
            if (compare_prefix(partial, best, prefix_bits(lead)) > 0) return;
        }
        if (lead < static_cast<int>(p.cells.size())) {
            bool all_homogeneous = true;
            for (std::size_t c = static_cast<std::size_t>(lead); c < p.cells.size(); ++c)
                if (p.cells[c].size() > 1 && !homogeneous(p.cells[c])) {
                    all_homogeneous = false;
                    break;
                }
            if (all_homogeneous) {
                std::uint64_t completions = 1;
                int pos = lead;
                for (std::size_t c = static_cast<std::size_t>(lead); c < p.cells.size(); ++c) {
                    for (int v : p.cells[c]) label_of[static_cast<std::size_t>(pos++)] = v;
                    for (std::size_t i = 2; i <= p.cells[c].size(); ++i)
                        completions *= static_cast<std::uint64_t>(i);
                }
                AdjBits bits = adjacency_bits(*g, label_of);
                int cmp = have_best ? compare_prefix(bits, best, prefix_bits(g->n)) : -1;
                if (cmp < 0) {
                    have_best = true;
                    best = bits;
                    best_label_of = label_of;
                    best_count = completions;
                } else if (cmp == 0) {
                    best_count += completions;
                }
                return;
            }
        }
        if (lead == static_cast<int>(p.cells.size())) {
            AdjBits bits = adjacency_bits(*g, label_of);
            int cmp = have_best ? compare_prefix(bits, best, prefix_bits(g->n)) : -1;
            if (cmp < 0) {
                have_best = true;
                best = bits;
                best_label_of = label_of;
                best_count = 1;
            } else if (cmp == 0) {
                ++best_count;
            }
            return;
        }
        const std::vector<int> target = p.cells[static_cast<std::size_t>(lead)];
        for (int v : target) {
            Partition child;
            child.cells.reserve(p.cells.size() + 1);
            for (int i = 0; i < lead; ++i) child.cells.push_back(p.cells[static_cast<std::size_t>(i)]);
            child.cells.push_back({v});
            std::vector<int> rest;
            for (int w : target)
                if (w != v) rest.push_back(w);
            child.cells.push_back(std::move(rest));
            for (std::size_t i = static_cast<std::size_t>(lead) + 1; i < p.cells.size(); ++i)
                child.cells.push_back(p.cells[i]);
            descend(child);
        }
    }
};

}  // namespace detail

struct CanonicalForm {
    int n = 0;
    detail::AdjBits bits{0, 0};
    std::string graph6;
    std::uint64_t aut_size = 1;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.n == b.n && a.bits == b.bits;
    }
};

// Canonical labeling by equitable refinement plus branch-and-bound over
// individualizations, minimizing the adjacency bitstring. The number of
// leaves attaining the minimum is the automorphism group order.
inline CanonicalForm canonical_form(const Graph& g) {
    if (g.order() > 16) throw scale_cap_error("canonical_form supports n <= 16");
    CanonicalForm out;
    out.n = g.order();
    if (g.order() <= 1) {
        out.graph6 = graph6_encode(g);
        return out;
    }
    detail::BitGraph bg = detail::BitGraph::from(g);
    detail::CanonSearch search;
    search.g = &bg;
    detail::Partition root;
    std::vector<int> all(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
    root.cells.push_back(std::move(all));
    search.descend(root);
    out.bits = search.best;
    out.aut_size = search.best_count;
    std::vector<std::pair<int, int>> edges;
    std::array<int, 16> pos{};  // canonical position of each original vertex
    for (int i = 0; i < g.order(); ++i)
        pos[static_cast<std::size_t>(search.best_label_of[static_cast<std::size_t>(i)])] = i;
    for (auto [u, v] : g.edges()) {
        int a = pos[static_cast<std::size_t>(u)];
        int b = pos[static_cast<std::size_t>(v)];
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    out.graph6 = graph6_encode(Graph::build(g.order(), edges));
    return out;
}

}  // namespace specgraph
