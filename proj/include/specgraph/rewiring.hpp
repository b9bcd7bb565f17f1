#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "specgraph/graph.hpp"
#include "specgraph/spectral.hpp"

namespace specgraph {

// Degree-preserving four-edge exchange: removes u-v' and u'-v, adds u-v and
// u'-v'. Never decreases the spectral radius when x_u >= x_u' and
// x_v >= x_v' in the source graph's Perron vector.
struct SwapMove {
    int u = -1;
    int u_prime = -1;
    int v = -1;
    int v_prime = -1;
    double x_u = 0.0;
    double x_u_prime = 0.0;
    double x_v = 0.0;
    double x_v_prime = 0.0;

    std::pair<std::pair<int, int>, std::pair<int, int>> removed_key() const {
        auto a = std::minmax(u, v_prime);
        auto b = std::minmax(u_prime, v);
        return std::minmax(std::make_pair(a.first, a.second), std::make_pair(b.first, b.second));
    }
    std::pair<std::pair<int, int>, std::pair<int, int>> added_key() const {
        auto a = std::minmax(u, v);
        auto b = std::minmax(u_prime, v_prime);
        return std::minmax(std::make_pair(a.first, a.second), std::make_pair(b.first, b.second));
    }
};

inline void validate_move(const Graph& g, const SwapMove& mv) {
    int ids[4] = {mv.u, mv.u_prime, mv.v, mv.v_prime};
    for (int id : ids)
        if (id < 0 || id >= g.order()) throw std::invalid_argument("two-switch vertex out of range");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (ids[i] == ids[j]) throw std::invalid_argument("two-switch vertices must be distinct");
    if (!g.has_edge(mv.u, mv.v_prime) || !g.has_edge(mv.u_prime, mv.v))
        throw std::invalid_argument("two-switch removes an absent edge");
    if (g.has_edge(mv.u, mv.v) || g.has_edge(mv.u_prime, mv.v_prime))
        throw std::invalid_argument("two-switch adds an existing edge");
}

inline Graph apply_two_switch(const Graph& g, const SwapMove& mv) {
    validate_move(g, mv);
    return g.rewired({{mv.u, mv.v_prime}, {mv.u_prime, mv.v}}, {{mv.u, mv.v}, {mv.u_prime, mv.v_prime}});
}

// An edge pair whose exchange is guaranteed to strictly increase the
// spectral radius: x_u >= x_u', x_v > x_v', both new edges absent, and the
// exchanged graph still connected.
struct BadPair {
    SwapMove move;
};

inline std::vector<BadPair> find_bad_pairs(const Graph& g, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != g.order())
        throw std::invalid_argument("eigenvector length must match graph order");
    std::vector<BadPair> out;
    std::set<std::pair<std::pair<std::pair<int, int>, std::pair<int, int>>,
                       std::pair<std::pair<int, int>, std::pair<int, int>>>>
        seen;
    auto at = [&](int v) { return x[static_cast<std::size_t>(v)]; };
    for (int u = 0; u < g.order(); ++u)
        for (int vp : g.neighbors(u))
            for (int up = 0; up < g.order(); ++up) {
                if (up == u || up == vp) continue;
                for (int v : g.neighbors(up)) {
                    if (v == u || v == vp) continue;
                    if (g.has_edge(u, v) || g.has_edge(up, vp)) continue;
                    if (!(at(u) >= at(up) - 1e-10)) continue;
                    if (!(at(v) > at(vp) + 1e-10)) continue;
                    SwapMove mv;
                    mv.u = u;
                    mv.u_prime = up;
                    mv.v = v;
                    mv.v_prime = vp;
                    mv.x_u = at(u);
                    mv.x_u_prime = at(up);
                    mv.x_v = at(v);
                    mv.x_v_prime = at(vp);
                    if (!seen.insert({mv.removed_key(), mv.added_key()}).second) continue;
                    if (!is_connected(apply_two_switch(g, mv))) continue;
                    out.push_back(BadPair{mv});
                }
            }
    std::sort(out.begin(), out.end(), [](const BadPair& a, const BadPair& b) {
        auto ka = std::make_pair(a.move.removed_key(), a.move.added_key());
        auto kb = std::make_pair(b.move.removed_key(), b.move.added_key());
        return ka < kb;
    });
    return out;
}

// moves every edge between u and S onto v instead; S must be nonempty and
// lie in N(u) \ N(v), with v not in S
inline Graph neighbor_shift(const Graph& g, int u, int v, const std::vector<int>& s) {
    if (u == v) throw std::invalid_argument("neighbor_shift: u and v must differ");
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
        throw std::invalid_argument("neighbor_shift: vertex out of range");
    if (s.empty()) throw std::invalid_argument("neighbor_shift: S must be nonempty");
    std::set<int> uniq(s.begin(), s.end());
    if (uniq.size() != s.size()) throw std::invalid_argument("neighbor_shift: S has duplicates");
    std::vector<std::pair<int, int>> removed, added;
    for (int w : s) {
        if (w == v) throw std::invalid_argument("neighbor_shift: v may not lie in S");
        if (w < 0 || w >= g.order() || !g.has_edge(w, u))
            throw std::invalid_argument("neighbor_shift: S must lie in N(u)");
        if (g.has_edge(w, v)) throw std::invalid_argument("neighbor_shift: S must avoid N(v)");
        removed.emplace_back(w, u);
        added.emplace_back(w, v);
    }
    return g.rewired(removed, added);
}

enum class ClimbPolicy { best_improvement, first_improvement };

struct ClimbStep {
    Graph graph;
    double lambda1 = 0.0;
    std::optional<SwapMove> move;  // empty on the initial entry
};

struct ClimbTrace {
    std::vector<ClimbStep> steps;
    bool fixed_point = false;  // no bad pair exists at the final graph
};

// Greedy spectral-radius ascent over bad-pair exchanges. Every accepted step
// must measurably increase lambda1 (> 1e-10); candidates failing that are
// skipped even when the eigenvector conditions nominate them.
inline ClimbTrace hill_climb(const Graph& g0, std::uint64_t seed,
                             ClimbPolicy policy = ClimbPolicy::best_improvement,
                             int max_steps = 100000) {
    if (!is_connected(g0)) throw std::invalid_argument("hill_climb needs a connected start");
    ClimbTrace trace;
    Graph cur = g0;
    auto sp = spectral_radius(cur);
    trace.steps.push_back(ClimbStep{cur, sp.lambda1, std::nullopt});
    std::mt19937_64 rng(seed);
    for (int step = 0; step < max_steps; ++step) {
        auto bad = find_bad_pairs(cur, sp.eigenvector);
        if (bad.empty()) {
            trace.fixed_point = true;
            return trace;
        }
        std::vector<std::size_t> order(bad.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        if (policy == ClimbPolicy::first_improvement) std::shuffle(order.begin(), order.end(), rng);

        bool accepted = false;
        Graph next;
        SpectralResult next_sp;
        SwapMove next_mv;
        double best_lambda = sp.lambda1;
        for (std::size_t idx : order) {
            Graph cand = apply_two_switch(cur, bad[idx].move);
            auto cand_sp = spectral_radius(cand);
            if (cand_sp.lambda1 - sp.lambda1 <= 1e-10) continue;
            if (policy == ClimbPolicy::first_improvement) {
                next = std::move(cand);
                next_sp = cand_sp;
                next_mv = bad[idx].move;
                accepted = true;
                break;
            }
            if (cand_sp.lambda1 > best_lambda) {  // ties keep the earlier (lexicographic) move
                best_lambda = cand_sp.lambda1;
                next = std::move(cand);
                next_sp = cand_sp;
                next_mv = bad[idx].move;
                accepted = true;
            }
        }
        if (!accepted) return trace;  // nominations exist but none measurably improves
        cur = std::move(next);
        sp = next_sp;
        trace.steps.push_back(ClimbStep{cur, sp.lambda1, next_mv});
    }
    throw std::runtime_error("hill_climb exceeded the step cap");
}

// Perron-entry monotonicity in degrees, per side of a bipartition: a
// higher-degree vertex should carry a strictly larger entry. Violations are
// reported, not errors; maximal graphs have none.
struct OrderViolation {
    int u = -1;  // the higher-degree vertex
    int v = -1;
    int degree_u = 0;
    int degree_v = 0;
    double x_u = 0.0;
    double x_v = 0.0;
};

inline std::vector<OrderViolation> eigenvector_order_check(const Graph& g, const Bipartition& bip,
                                                           int delta) {
    if (!is_connected(g)) throw std::invalid_argument("eigenvector_order_check needs a connected graph");
    degree_sequence(g, bip);  // validates the bipartition against the edges
    if (g.max_degree() > delta)
        throw std::invalid_argument("eigenvector_order_check: max degree exceeds delta");
    auto x = spectral_radius(g).eigenvector;
    std::vector<OrderViolation> out;
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v) {
            if (u == v) continue;
            if (bip.side[static_cast<std::size_t>(u)] != bip.side[static_cast<std::size_t>(v)]) continue;
            if (g.degree(u) <= g.degree(v)) continue;
            double xu = x[static_cast<std::size_t>(u)];
            double xv = x[static_cast<std::size_t>(v)];
            if (xu > xv + 1e-10) continue;
            out.push_back(OrderViolation{u, v, g.degree(u), g.degree(v), xu, xv});
        }
    return out;
}

}  // namespace specgraph
