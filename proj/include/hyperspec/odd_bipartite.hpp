#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

/// Odd-bipartition certificate: every edge meets V1 (the true-flagged side)
/// in an odd number of vertices, and both sides are nonempty.
struct VertexPartition {
    std::vector<bool> in_v1;

    std::size_t v1_size() const {
        std::size_t c = 0;
        for (bool b : in_v1) c += b ? 1 : 0;
        return c;
    }
};

/// Decides odd-bipartiteness for even uniformity. One GF(2) equation per
/// edge (sum of member indicators = 1), solved by elimination; free
/// variables (isolated vertices among them) are set to false, which picks
/// the lexicographically smallest solution. Trivial hypergraphs (no edges)
/// are odd-bipartite by definition and get the partition {0} vs rest when
/// n >= 2; an edgeless hypergraph with n <= 1 has no proper bipartition and
/// yields nullopt.
inline std::optional<VertexPartition> is_odd_bipartite(const UniformHypergraph& h) {
    if (h.k % 2 != 0)
        throw std::domain_error(
            "odd-bipartiteness defined for even uniformity only");

    if (h.edges.empty()) {
        if (h.n < 2) return std::nullopt;
        VertexPartition p;
        p.in_v1.assign(h.n, false);
        p.in_v1[0] = true;
        return p;
    }

    const std::size_t words = (h.n + 1 + 63) / 64;  // column n = RHS
    auto get = [&](const std::vector<std::uint64_t>& row, std::size_t c) {
        return (row[c / 64] >> (c % 64)) & 1u;
    };

    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(h.edge_count());
    for (const Edge& e : h.edges) {
        std::vector<std::uint64_t> row(words, 0);
        for (VertexId v : e) row[v / 64] ^= std::uint64_t(1) << (v % 64);
        row[h.n / 64] ^= std::uint64_t(1) << (h.n % 64);  // RHS = 1
        rows.push_back(std::move(row));
    }

    // reduced row echelon form, pivots in increasing column order
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < h.n && next_row < rows.size(); ++col) {
        std::size_t pivot = next_row;
        while (pivot < rows.size() && !get(rows[pivot], col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[next_row], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next_row || !get(rows[r], col)) continue;
            for (std::size_t w = 0; w < words; ++w) rows[r][w] ^= rows[next_row][w];
        }
        pivots.emplace_back(next_row, col);
        ++next_row;
    }
    for (std::size_t r = next_row; r < rows.size(); ++r)
        if (get(rows[r], h.n)) return std::nullopt;  // 0 = 1: infeasible

    VertexPartition p;
    p.in_v1.assign(h.n, false);
    for (auto [r, c] : pivots) p.in_v1[c] = get(rows[r], h.n);

    // Even k makes both sides nonempty automatically: each edge meets V1 in
    // an odd count >= 1 and V2 in k - odd >= 1 vertices.
    return p;
}

}  // namespace hyperspec
