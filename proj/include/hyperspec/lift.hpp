#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/power.hpp"
#include "hyperspec/tensor.hpp"
#include "hyperspec/vec.hpp"

namespace hyperspec {

struct LiftedEigenpair {
    double lambda = 0.0;
    RealVector eigenvector;
};

/// Lifts an adjacency eigenpair (mu, x) of an ordinary graph to the
/// adjacency tensor of its generalized power G^{k,s}: the lifted eigenvalue
/// is mu^{2s/k} and the eigenvector takes x_v^{2/k} on the block of v and
/// (x_u x_v / mu)^{1/k} on the block of edge {u,v}. The fractional powers
/// only stay real for mu > 0 and componentwise nonnegative x; other
/// eigenpairs are rejected rather than silently leaving the reals.
inline LiftedEigenpair lift_adjacency_eigenpair(const UniformHypergraph& g,
                                                double mu, const RealVector& x,
                                                std::size_t k, std::size_t s,
                                                const PowerVertexMap& map) {
    if (g.k != 2)
        throw std::invalid_argument("lift requires an ordinary base graph (k = 2)");
    if (x.size() != g.n)
        throw std::invalid_argument("lift: eigenvector dimension mismatch");
    if (mu == 0.0)
        throw std::invalid_argument("lift requires mu != 0");
    if (k < 3 || s < 1 || 2 * s > k)
        throw std::invalid_argument("lift: invalid (k, s) pair");
    if (map.block_size != s || map.vertex_blocks.size() != g.n ||
        map.edge_blocks.size() != g.edge_count())
        throw std::invalid_argument("lift: vertex map does not match (G, k, s)");

    const double defect = residual(TensorKind::Adjacency, g, mu, x);
    if (!(defect <= 1e-10))
        throw std::invalid_argument(
            "lift: (mu, x) is not an adjacency eigenpair of G (residual " +
            std::to_string(defect) + ")");

    if (mu < 0.0)
        throw std::domain_error("lift undefined over reals for this eigenpair");
    for (double xv : x)
        if (xv < 0.0)
            throw std::domain_error("lift undefined over reals for this eigenpair");

    const double kk = static_cast<double>(k);
    LiftedEigenpair out;
    out.lambda = std::pow(mu, 2.0 * static_cast<double>(s) / kk);

    std::size_t total = s * g.n + (k - 2 * s) * g.edge_count();
    out.eigenvector.assign(total, 0.0);
    for (VertexId v = 0; v < g.n; ++v) {
        const double val = std::pow(x[v], 2.0 / kk);
        for (VertexId w : map.vertex_blocks[v]) out.eigenvector.at(w) = val;
    }
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const VertexId u = g.edges[i][0];
        const VertexId v = g.edges[i][1];
        const double val = std::pow(x[u] * x[v] / mu, 1.0 / kk);
        for (VertexId w : map.edge_blocks[i]) out.eigenvector.at(w) = val;
    }
    return out;
}

}  // namespace hyperspec
