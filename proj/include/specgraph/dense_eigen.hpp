#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "specgraph/error.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/spectral.hpp"

namespace specgraph {

// Dense symmetric eigensolver oracle (Eigen). Independent of the power
// iteration; used to cross-check it and to settle near-ties.
inline SpectralResult dense_eigensolve(const Graph& g) {
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("dense_eigensolve needs n >= 1");
    if (n > 64) throw scale_cap_error("dense_eigensolve capped at n <= 64");

    int ncomp = 0;
    auto comp = connected_components(g, &ncomp);
    std::vector<std::vector<int>> members(static_cast<std::size_t>(ncomp));
    for (int v = 0; v < n; ++v) members[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);

    SpectralResult res;
    res.method = SpectralResult::Method::dense_oracle;
    res.eigenvector.assign(static_cast<std::size_t>(n), 0.0);
    res.converged = true;

    double best_lambda = 0.0;
    int best = -1;
    Eigen::VectorXd best_vec;
    for (int c = 0; c < ncomp; ++c) {
        const auto& verts = members[static_cast<std::size_t>(c)];
        const int nc = static_cast<int>(verts.size());
        Eigen::MatrixXd A = Eigen::MatrixXd::Zero(nc, nc);
        std::vector<int> local(static_cast<std::size_t>(n), -1);
        for (int i = 0; i < nc; ++i) local[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] = i;
        for (int i = 0; i < nc; ++i)
            for (int w : g.neighbors(verts[static_cast<std::size_t>(i)]))
                A(i, local[static_cast<std::size_t>(w)]) = 1.0;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("dense eigensolver failed to converge");
        double lam = solver.eigenvalues()(nc - 1);
        if (best < 0 || lam > best_lambda) {
            best = c;
            best_lambda = lam;
            best_vec = solver.eigenvectors().col(nc - 1);
        }
    }

    const auto& verts = members[static_cast<std::size_t>(best)];
    double sum = best_vec.sum();
    if (sum < 0) best_vec = -best_vec;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        double entry = best_vec(static_cast<int>(i));
        if (entry < 0.0) entry = entry > -1e-12 ? 0.0 : entry;  // Perron noise only
        res.eigenvector[static_cast<std::size_t>(verts[i])] = entry;
    }
    res.lambda1 = best_lambda;
    double r = 0.0;
    for (int v = 0; v < n; ++v) {
        double acc = 0.0;
        for (int w : g.neighbors(v)) acc += res.eigenvector[static_cast<std::size_t>(w)];
        r = std::max(r, std::abs(acc - best_lambda * res.eigenvector[static_cast<std::size_t>(v)]));
    }
    res.residual = r;
    return res;
}

}  // namespace specgraph
