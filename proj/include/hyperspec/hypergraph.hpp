#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperspec {

using VertexId = std::size_t;

/// An edge is a strictly increasing list of vertex ids.
using Edge = std::vector<VertexId>;

/// k-uniform hypergraph with dense 0-based vertex ids.
///
/// Canonical form: every edge sorted ascending, the edge list sorted
/// lexicographically, no duplicates. Values are immutable after
/// construction, so canonical-form equality doubles as identity.
struct UniformHypergraph {
    std::size_t n = 0;              // vertex count
    std::size_t k = 2;              // uniformity, >= 2
    std::vector<Edge> edges;        // canonical order
    std::vector<std::size_t> degrees;

    std::size_t edge_count() const { return edges.size(); }

    std::size_t degree(VertexId v) const { return degrees.at(v); }

    std::size_t max_degree() const {
        std::size_t d = 0;
        for (std::size_t dv : degrees) d = std::max(d, dv);
        return d;
    }

    bool operator==(const UniformHypergraph& other) const {
        return n == other.n && k == other.k && edges == other.edges;
    }
};

/// Validates and canonicalizes an edge list into a UniformHypergraph.
/// Rejects wrong-sized edges, repeated vertices inside an edge, out-of-range
/// vertex ids and duplicate edges; messages carry the offending edge index
/// (indices refer to the input order, before canonicalization).
inline UniformHypergraph build_hypergraph(std::size_t n, std::size_t k,
                                          std::vector<Edge> edges) {
    if (k < 2)
        throw std::invalid_argument("uniformity k must be at least 2, got " +
                                    std::to_string(k));
    std::map<Edge, std::size_t> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        Edge& e = edges[i];
        if (e.size() != k)
            throw std::invalid_argument(
                "wrong edge size in edge " + std::to_string(i) + " (got " +
                std::to_string(e.size()) + ", expected " + std::to_string(k) + ")");
        std::sort(e.begin(), e.end());
        for (std::size_t j = 0; j + 1 < e.size(); ++j)
            if (e[j] == e[j + 1])
                throw std::invalid_argument("repeated vertex in edge " +
                                            std::to_string(i));
        if (!e.empty() && e.back() >= n)
            throw std::invalid_argument("vertex id out of range in edge " +
                                        std::to_string(i));
        auto [it, fresh] = seen.emplace(e, i);
        if (!fresh)
            throw std::invalid_argument("duplicate edge " + std::to_string(i) +
                                        " (same as edge " +
                                        std::to_string(it->second) + ")");
    }
    std::sort(edges.begin(), edges.end());

    UniformHypergraph h;
    h.n = n;
    h.k = k;
    h.edges = std::move(edges);
    h.degrees.assign(n, 0);
    for (const Edge& e : h.edges)
        for (VertexId v : e) ++h.degrees[v];
    return h;
}

/// A connected piece of a hypergraph together with the injective back-map
/// from its local vertex ids into the parent's.
struct Component {
    UniformHypergraph hypergraph;
    std::vector<VertexId> vertex_map;  // local id -> parent id, increasing
};

/// Maximal connected sub-hypergraphs, ordered by their smallest parent
/// vertex. Isolated vertices become singleton components with no edges.
inline std::vector<Component> components(const UniformHypergraph& h) {
    std::vector<std::vector<std::size_t>> incident(h.n);
    for (std::size_t ei = 0; ei < h.edges.size(); ++ei)
        for (VertexId v : h.edges[ei]) incident[v].push_back(ei);

    std::vector<int> comp_of(h.n, -1);
    int comp_count = 0;
    std::vector<VertexId> stack;
    for (VertexId start = 0; start < h.n; ++start) {
        if (comp_of[start] >= 0) continue;
        int c = comp_count++;
        comp_of[start] = c;
        stack.assign(1, start);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (std::size_t ei : incident[v])
                for (VertexId u : h.edges[ei])
                    if (comp_of[u] < 0) {
                        comp_of[u] = c;
                        stack.push_back(u);
                    }
        }
    }

    std::vector<std::vector<VertexId>> members(comp_count);
    for (VertexId v = 0; v < h.n; ++v) members[comp_of[v]].push_back(v);

    std::vector<Component> out;
    out.reserve(comp_count);
    for (int c = 0; c < comp_count; ++c) {
        const auto& verts = members[c];  // ascending by construction
        std::vector<Edge> local_edges;
        for (const Edge& e : h.edges) {
            if (comp_of[e.front()] != c) continue;
            Edge le;
            le.reserve(e.size());
            for (VertexId v : e) {
                auto it = std::lower_bound(verts.begin(), verts.end(), v);
                le.push_back(static_cast<VertexId>(it - verts.begin()));
            }
            local_edges.push_back(std::move(le));
        }
        Component comp;
        comp.hypergraph = build_hypergraph(verts.size(), h.k, std::move(local_edges));
        comp.vertex_map = verts;
        out.push_back(std::move(comp));
    }
    return out;
}

/// Disjoint union; vertices of `b` are shifted past those of `a`.
inline UniformHypergraph disjoint_union(const UniformHypergraph& a,
                                        const UniformHypergraph& b) {
    if (a.k != b.k)
        throw std::invalid_argument("disjoint_union requires equal uniformity");
    std::vector<Edge> edges = a.edges;
    for (const Edge& e : b.edges) {
        Edge shifted;
        shifted.reserve(e.size());
        for (VertexId v : e) shifted.push_back(v + a.n);
        edges.push_back(std::move(shifted));
    }
    return build_hypergraph(a.n + b.n, a.k, std::move(edges));
}

// ---- generators ------------------------------------------------------------

inline UniformHypergraph path(std::size_t n) {
    if (n < 1) throw std::invalid_argument("path requires n >= 1");
    std::vector<Edge> edges;
    for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return build_hypergraph(n, 2, std::move(edges));
}

inline UniformHypergraph cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    std::vector<Edge> edges;
    for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return build_hypergraph(n, 2, std::move(edges));
}

/// Star with d edges: center 0, leaves 1..d.
inline UniformHypergraph star(std::size_t d) {
    if (d < 1) throw std::invalid_argument("star requires d >= 1");
    std::vector<Edge> edges;
    for (VertexId i = 1; i <= d; ++i) edges.push_back({0, i});
    return build_hypergraph(d + 1, 2, std::move(edges));
}

inline UniformHypergraph complete_graph(std::size_t n) {
    if (n < 2) throw std::invalid_argument("complete_graph requires n >= 2");
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) edges.push_back({i, j});
    return build_hypergraph(n, 2, std::move(edges));
}

/// All k-subsets of {0,...,n-1}.
inline UniformHypergraph complete_kuniform(std::size_t n, std::size_t k) {
    if (k < 2 || n < k)
        throw std::invalid_argument("complete_kuniform requires n >= k >= 2");
    std::vector<Edge> edges;
    Edge cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        edges.push_back(cur);
        // next k-subset in lexicographic order
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return build_hypergraph(n, k, std::move(edges));
}

/// Sunflower S_d^k: heart vertex 0 of degree d, every edge is the heart
/// plus k-1 private pendant vertices.
inline UniformHypergraph sunflower(std::size_t d, std::size_t k) {
    if (d < 1) throw std::invalid_argument("sunflower requires d >= 1");
    if (k < 2) throw std::invalid_argument("sunflower requires k >= 2");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < d; ++i) {
        Edge e{0};
        for (std::size_t j = 0; j < k - 1; ++j)
            e.push_back(1 + i * (k - 1) + j);
        edges.push_back(std::move(e));
    }
    return build_hypergraph(1 + d * (k - 1), k, std::move(edges));
}

}  // namespace hyperspec
