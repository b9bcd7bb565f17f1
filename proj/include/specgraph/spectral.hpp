#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

struct SpectralResult {
    double lambda1 = 0.0;
    std::vector<double> eigenvector;  // unit 2-norm, entrywise >= 0
    std::uint64_t iterations = 0;
    double residual = 0.0;  // inf-norm of A x - lambda1 x
    enum class Method { power_shifted, dense_oracle } method = Method::power_shifted;
    bool converged = true;
};

namespace detail {

struct ComponentPower {
    double lambda = 0.0;
    std::vector<double> x;  // per component vertex, unit norm
    std::uint64_t iterations = 0;
    double residual = 0.0;
    bool converged = true;
};

// Power iteration on A+I restricted to one component. The shift keeps the
// iteration from oscillating between +lambda1 and -lambda1 on bipartite
// graphs; the reported value is (shifted eigenvalue) - 1, i.e. the Rayleigh
// quotient of A itself. Deterministic all-ones start.
inline ComponentPower power_component(const Graph& g, const std::vector<int>& verts,
                                      double tol, std::uint64_t max_iter) {
    const std::size_t nc = verts.size();
    ComponentPower out;
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < nc; ++i) local[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
    std::vector<double> x(nc, 1.0 / std::sqrt(static_cast<double>(nc))), y(nc);
    for (std::uint64_t it = 1; it <= max_iter; ++it) {
        for (std::size_t i = 0; i < nc; ++i) {
            double acc = 0.0;
            for (int w : g.neighbors(verts[i])) acc += x[static_cast<std::size_t>(local[static_cast<std::size_t>(w)])];
            y[i] = acc;
        }
        double lam = 0.0;
        for (std::size_t i = 0; i < nc; ++i) lam += x[i] * y[i];
        double res = 0.0;
        for (std::size_t i = 0; i < nc; ++i) res = std::max(res, std::abs(y[i] - lam * x[i]));
        out.iterations = it;
        out.lambda = lam;
        out.residual = res;
        if (res <= tol) {
            out.x = x;
            return out;
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < nc; ++i) {
            y[i] += x[i];  // apply the +I shift
            norm += y[i] * y[i];
        }
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < nc; ++i) x[i] = y[i] / norm;
    }
    out.converged = false;
    out.x = x;
    return out;
}

}  // namespace detail

// Principal eigenvalue/eigenvector via shifted power iteration. On a
// disconnected graph the component attaining the largest lambda1 supplies the
// eigenvector; all other components get zero entries.
inline SpectralResult spectral_radius(const Graph& g, double tol = 1e-12,
                                      std::uint64_t max_iter = 1000000) {
    if (g.order() < 1) throw std::invalid_argument("spectral_radius needs n >= 1");
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    int ncomp = 0;
    auto comp = connected_components(g, &ncomp);
    std::vector<std::vector<int>> members(static_cast<std::size_t>(ncomp));
    for (int v = 0; v < g.order(); ++v) members[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);

    SpectralResult res;
    res.method = SpectralResult::Method::power_shifted;
    res.eigenvector.assign(static_cast<std::size_t>(g.order()), 0.0);
    int best = -1;
    detail::ComponentPower best_run;
    for (int c = 0; c < ncomp; ++c) {
        auto run = detail::power_component(g, members[static_cast<std::size_t>(c)], tol, max_iter);
        res.iterations += run.iterations;
        res.residual = std::max(res.residual, run.residual);
        res.converged = res.converged && run.converged;
        if (best < 0 || run.lambda > best_run.lambda) {
            best = c;
            best_run = std::move(run);
        }
    }
    res.lambda1 = best_run.lambda;
    const auto& verts = members[static_cast<std::size_t>(best)];
    for (std::size_t i = 0; i < verts.size(); ++i)
        res.eigenvector[static_cast<std::size_t>(verts[i])] = std::abs(best_run.x[i]);
    return res;
}

inline double rayleigh(const Graph& g, const std::vector<double>& y) {
    if (static_cast<int>(y.size()) != g.order())
        throw std::invalid_argument("rayleigh: vector length mismatch");
    double den = 0.0;
    for (double v : y) den += v * v;
    if (den == 0.0) throw std::invalid_argument("rayleigh: zero vector");
    double num = 0.0;
    for (auto [u, v] : g.edges()) num += 2.0 * y[static_cast<std::size_t>(u)] * y[static_cast<std::size_t>(v)];
    return num / den;
}

inline double path_lambda(int n) {
    if (n < 1) throw std::invalid_argument("path_lambda needs n >= 1");
    return 2.0 * std::cos(std::numbers::pi / (n + 1));
}

inline double kn_minus_edge_lambda(int n) {
    if (n < 3) throw std::invalid_argument("kn_minus_edge_lambda needs n >= 3");
    double nn = static_cast<double>(n);
    return (nn - 3.0 + std::sqrt(nn * nn + 2.0 * nn - 7.0)) / 2.0;
}

}  // namespace specgraph
