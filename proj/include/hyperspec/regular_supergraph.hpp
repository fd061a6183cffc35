#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

/// Embeds an ordinary graph G into a Delta-regular supergraph that contains
/// G as the induced subgraph on its first n vertices. Doubling construction:
/// take two disjoint copies and join every degree-deficient vertex to its
/// twin; the minimum degree rises by one per round, so at most Delta rounds
/// are needed. Added edges always cross between copies, which keeps the
/// induced subgraph on the original vertices intact.
inline UniformHypergraph regular_supergraph(const UniformHypergraph& g) {
    if (g.k != 2)
        throw std::invalid_argument(
            "regular_supergraph requires an ordinary graph (k = 2)");
    const std::size_t delta = g.max_degree();
    if (delta < 1)
        throw std::invalid_argument("regular_supergraph requires max degree >= 1");

    UniformHypergraph cur = g;
    while (true) {
        bool deficient = false;
        for (std::size_t d : cur.degrees)
            if (d < delta) { deficient = true; break; }
        if (!deficient) return cur;

        std::vector<Edge> edges = cur.edges;
        for (const Edge& e : cur.edges)
            edges.push_back({e[0] + cur.n, e[1] + cur.n});
        for (VertexId v = 0; v < cur.n; ++v)
            if (cur.degrees[v] < delta) edges.push_back({v, v + cur.n});
        cur = build_hypergraph(2 * cur.n, 2, std::move(edges));
    }
}

}  // namespace hyperspec
