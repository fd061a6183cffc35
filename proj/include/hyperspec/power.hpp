#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

/// Provenance of the vertices of a (generalized) power hypergraph: each base
/// vertex v owns a block V_v of s new vertices, each base edge e owns a block
/// V_e of k-2s new vertices. Blocks are pairwise disjoint and cover all
/// vertices of the power hypergraph.
struct PowerVertexMap {
    std::size_t block_size = 1;  // s
    std::vector<std::vector<VertexId>> vertex_blocks;  // indexed by base vertex
    std::vector<std::vector<VertexId>> edge_blocks;    // indexed by base edge
};

struct PowerConstruction {
    UniformHypergraph hypergraph;
    PowerVertexMap map;
};

namespace detail {

// Shared builder for G^{k,s}: base blocks occupy ids [v*s, (v+1)*s), edge
// blocks follow at s*n + i*(k-2s). Ascending ids make edges canonical as
// concatenated blocks.
inline PowerConstruction power_construction(const UniformHypergraph& g,
                                            std::size_t k_target, std::size_t s) {
    const std::size_t n = g.n;
    const std::size_t m = g.edge_count();
    const std::size_t pad = k_target - 2 * s;

    PowerVertexMap map;
    map.block_size = s;
    map.vertex_blocks.resize(n);
    for (VertexId v = 0; v < n; ++v)
        for (std::size_t j = 0; j < s; ++j)
            map.vertex_blocks[v].push_back(v * s + j);
    map.edge_blocks.resize(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < pad; ++j)
            map.edge_blocks[i].push_back(s * n + i * pad + j);

    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Edge e;
        e.reserve(k_target);
        for (VertexId v : g.edges[i])
            for (VertexId w : map.vertex_blocks[v]) e.push_back(w);
        for (VertexId w : map.edge_blocks[i]) e.push_back(w);
        edges.push_back(std::move(e));
    }

    PowerConstruction out;
    out.hypergraph = build_hypergraph(s * n + pad * m, k_target, std::move(edges));
    out.map = std::move(map);
    return out;
}

}  // namespace detail

/// kth power of an ordinary graph: every edge is padded with k-2 fresh
/// pendant vertices. power(g, 2) returns g unchanged.
inline PowerConstruction power(const UniformHypergraph& g, std::size_t k_target) {
    if (g.k != 2)
        throw std::invalid_argument("power requires an ordinary graph (k = 2)");
    if (k_target < 2)
        throw std::invalid_argument("power requires target uniformity >= 2");
    return detail::power_construction(g, k_target, 1);
}

/// Generalized power G^{k,s}: each base vertex blown up to a block of s
/// copies, each edge padded with k-2s fresh vertices. s = 1 recovers the
/// plain kth power.
inline PowerConstruction generalized_power(const UniformHypergraph& g,
                                           std::size_t k_target, std::size_t s) {
    if (g.k != 2)
        throw std::invalid_argument(
            "generalized_power requires an ordinary graph (k = 2)");
    if (k_target < 3)
        throw std::invalid_argument(
            "generalized_power requires target uniformity >= 3");
    if (s < 1 || 2 * s > k_target)
        throw std::invalid_argument("blow-up size s = " + std::to_string(s) +
                                    " out of range 1 <= s <= " +
                                    std::to_string(k_target) + "/2");
    return detail::power_construction(g, k_target, s);
}

/// Inserts one fresh pendant vertex into every edge, raising the uniformity
/// from k to k+1. New vertex n+i lies only in edge i.
inline UniformHypergraph insert_pendant(const UniformHypergraph& h) {
    if (h.edges.empty())
        throw std::invalid_argument("insert_pendant requires at least one edge");
    std::vector<Edge> edges;
    edges.reserve(h.edge_count());
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        Edge e = h.edges[i];
        e.push_back(h.n + i);
        edges.push_back(std::move(e));
    }
    return build_hypergraph(h.n + h.edge_count(), h.k + 1, std::move(edges));
}

}  // namespace hyperspec
