#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/vec.hpp"

namespace hyperspec {

enum class TensorKind { Adjacency, Laplacian, SignlessLaplacian };

inline const char* tensor_kind_name(TensorKind kind) {
    switch (kind) {
        case TensorKind::Adjacency: return "A";
        case TensorKind::Laplacian: return "L";
        case TensorKind::SignlessLaplacian: return "Q";
    }
    return "?";
}

inline TensorKind parse_tensor_kind(const std::string& s) {
    if (s == "A" || s == "adjacency") return TensorKind::Adjacency;
    if (s == "L" || s == "laplacian") return TensorKind::Laplacian;
    if (s == "Q" || s == "signless-laplacian") return TensorKind::SignlessLaplacian;
    throw std::invalid_argument("unknown tensor kind '" + s + "' (expected A, L or Q)");
}

namespace detail {

// Product of the edge's components of x, skipping position `skip`. Switches
// to sign + log accumulation when a factor's magnitude drops below 1e-150:
// pendant components shrink geometrically with k and the plain product can
// underflow before the result does.
inline double edge_product_excluding(const Edge& e, std::size_t skip,
                                     const RealVector& x) {
    bool tiny = false;
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (j == skip) continue;
        const double f = x[e[j]];
        if (f == 0.0) return 0.0;
        if (std::abs(f) < 1e-150) tiny = true;
    }
    if (!tiny) {
        double p = 1.0;
        for (std::size_t j = 0; j < e.size(); ++j)
            if (j != skip) p *= x[e[j]];
        return p;
    }
    int sign = 1;
    double log_sum = 0.0;
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (j == skip) continue;
        const double f = x[e[j]];
        if (f < 0.0) sign = -sign;
        log_sum += std::log(std::abs(f));
    }
    return sign * std::exp(log_sum);
}

// Adjacency part only: component v is the sum over edges containing v of the
// product of the other k-1 components. Edges in canonical order gives a
// deterministic accumulation order per vertex.
inline RealVector adjacency_apply(const UniformHypergraph& h, const RealVector& x) {
    RealVector out(h.n, 0.0);
    for (const Edge& e : h.edges)
        for (std::size_t pos = 0; pos < e.size(); ++pos)
            out[e[pos]] += edge_product_excluding(e, pos, x);
    return out;
}

}  // namespace detail

/// Matrix-free application of the chosen hypergraph tensor: component v of
/// A(H)x is the sum over edges containing v of the product of the other
/// entries (the (k-1)! permutations cancel the 1/(k-1)! entry value);
/// Q adds d(v) x_v^{k-1}, L subtracts the adjacency part from it.
inline RealVector apply(TensorKind kind, const UniformHypergraph& h,
                        const RealVector& x) {
    if (x.size() != h.n)
        throw std::invalid_argument("apply: vector dimension " +
                                    std::to_string(x.size()) +
                                    " does not match vertex count " +
                                    std::to_string(h.n));
    RealVector adj = detail::adjacency_apply(h, x);
    if (kind == TensorKind::Adjacency) return adj;
    RealVector out(h.n);
    for (VertexId v = 0; v < h.n; ++v) {
        const double diag = static_cast<double>(h.degrees[v]) * int_pow(x[v], h.k - 1);
        out[v] = kind == TensorKind::SignlessLaplacian ? diag + adj[v] : diag - adj[v];
    }
    return out;
}

/// Dense order-k dimension-n array, row-major. Order 1 tensors are plain
/// vectors; they appear as the right factor of the general tensor product.
struct DenseTensor {
    std::size_t order = 0;
    std::size_t dim = 0;
    std::vector<double> entries;  // dim^order values

    double& at_linear(std::size_t idx) { return entries[idx]; }
    double at_linear(std::size_t idx) const { return entries[idx]; }
};

namespace detail {

constexpr std::size_t kDenseEntryBudget = 10'000'000;

inline std::size_t checked_dense_size(std::size_t dim, std::size_t order) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < order; ++i) {
        if (dim != 0 && size > kDenseEntryBudget / dim)
            throw std::invalid_argument(
                "dense tensor would exceed the 10^7 entry budget (dim " +
                std::to_string(dim) + ", order " + std::to_string(order) + ")");
        size *= dim;
    }
    return size;
}

}  // namespace detail

/// Dense materialization per the entry rule: 1/(k-1)! on every index tuple
/// whose support is an edge, the degree on diagonal positions for the D
/// part. Hard-errors when n^k exceeds the 10^7 entry budget.
inline DenseTensor materialize(TensorKind kind, const UniformHypergraph& h) {
    DenseTensor t;
    t.order = h.k;
    t.dim = h.n;
    t.entries.assign(detail::checked_dense_size(h.n, h.k), 0.0);

    double fact = 1.0;
    for (std::size_t i = 2; i < h.k; ++i) fact *= static_cast<double>(i);
    const double adj_entry = 1.0 / fact;  // 1/(k-1)!
    const double off = kind == TensorKind::Laplacian ? -adj_entry : adj_entry;

    for (const Edge& e : h.edges) {
        Edge perm = e;  // sorted, so next_permutation enumerates all k! orders
        do {
            std::size_t idx = 0;
            for (VertexId v : perm) idx = idx * h.n + v;
            t.entries[idx] = off;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    if (kind != TensorKind::Adjacency) {
        for (VertexId v = 0; v < h.n; ++v) {
            std::size_t idx = 0;
            for (std::size_t i = 0; i < h.k; ++i) idx = idx * h.n + v;
            t.entries[idx] += static_cast<double>(h.degrees[v]);
        }
    }
    return t;
}

/// Brute-force tensor-vector application over all n^(k-1) index tuples.
/// Oracle for `apply`; no sparsity shortcuts.
inline RealVector dense_apply(const DenseTensor& t, const RealVector& x) {
    if (t.order < 1) throw std::invalid_argument("dense_apply requires order >= 1");
    if (x.size() != t.dim)
        throw std::invalid_argument("dense_apply: dimension mismatch");
    if (t.order == 1) return RealVector(t.entries);

    std::size_t tail = 1;
    for (std::size_t i = 0; i + 1 < t.order; ++i) tail *= t.dim;

    RealVector out(t.dim, 0.0);
    for (std::size_t i = 0; i < t.dim; ++i) {
        double acc = 0.0;
        for (std::size_t lin = 0; lin < tail; ++lin) {
            const double entry = t.entries[i * tail + lin];
            if (entry == 0.0) continue;
            double prod = entry;
            std::size_t rest = lin;
            for (std::size_t j = 0; j + 1 < t.order; ++j) {
                prod *= x[rest % t.dim];
                rest /= t.dim;
            }
            acc += prod;
        }
        out[i] = acc;
    }
    return out;
}

/// General tensor product: for A of order m and B of order k (equal
/// dimensions), the result C has order (m-1)(k-1)+1 with
/// C_{i,a1..a_{m-1}} = sum over i2..im of A_{i,i2..im} B_{i2,a1} ... B_{im,a_{m-1}},
/// each a_j a (k-1)-fold multi-index. With an order-1 B this is exactly
/// tensor-vector application.
inline DenseTensor general_product(const DenseTensor& a, const DenseTensor& b) {
    if (a.order < 2) throw std::invalid_argument("general_product: A must have order >= 2");
    if (b.order < 1) throw std::invalid_argument("general_product: B must have order >= 1");
    if (a.dim != b.dim)
        throw std::invalid_argument(
            "general_product: A's non-leading dimension must equal B's leading dimension");

    const std::size_t n = a.dim;
    const std::size_t q = b.order - 1;        // width of each alpha block
    const std::size_t m1 = a.order - 1;       // number of summed indices
    const std::size_t out_order = m1 * q + 1;

    DenseTensor c;
    c.order = out_order;
    c.dim = n;
    c.entries.assign(detail::checked_dense_size(n, out_order), 0.0);

    std::size_t alpha_count = 1;  // n^(m1*q)
    for (std::size_t i = 0; i < m1 * q; ++i) alpha_count *= n;
    std::size_t block = 1;  // n^q, entries per B row
    for (std::size_t i = 0; i < q; ++i) block *= n;
    std::size_t sum_count = 1;  // n^m1
    for (std::size_t i = 0; i < m1; ++i) sum_count *= n;

    std::vector<std::size_t> alpha(m1);  // linear alpha_j, most significant first
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t alin = 0; alin < alpha_count; ++alin) {
            std::size_t rest = alin;
            for (std::size_t j = m1; j-- > 0;) {
                alpha[j] = rest % block;
                rest /= block;
            }
            double acc = 0.0;
            for (std::size_t slin = 0; slin < sum_count; ++slin) {
                const double a_entry = a.entries[i * sum_count + slin];
                if (a_entry == 0.0) continue;
                double prod = a_entry;
                std::size_t srest = slin;
                for (std::size_t j = m1; j-- > 0;) {
                    const std::size_t ij = srest % n;  // value of index i_{j+2}
                    srest /= n;
                    prod *= b.entries[ij * block + alpha[j]];
                }
                acc += prod;
            }
            c.entries[i * alpha_count + alin] = acc;
        }
    }
    return c;
}

/// Scale-invariant eigenpair defect: max-norm of T x - lambda x^[k-1],
/// divided by ||x||_inf^{k-1}. Zero exactly when (lambda, x) solves the
/// eigen-equations.
inline double residual(TensorKind kind, const UniformHypergraph& h, double lambda,
                       const RealVector& x) {
    const double xmax = norm_inf(x);
    if (xmax == 0.0) throw std::invalid_argument("residual: zero vector");
    const RealVector tx = apply(kind, h, x);
    double worst = 0.0;
    for (VertexId v = 0; v < h.n; ++v)
        worst = std::max(worst, std::abs(tx[v] - lambda * int_pow(x[v], h.k - 1)));
    return worst / int_pow(xmax, h.k - 1);
}

}  // namespace hyperspec
