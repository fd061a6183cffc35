#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/odd_bipartite.hpp"
#include "hyperspec/tensor.hpp"
#include "hyperspec/vec.hpp"

namespace hyperspec {

struct SolverConfig {
    double tol = 1e-10;           // Collatz-Wielandt bound-gap target
    std::size_t max_iter = 1000000;
    double shift = 1.0;           // diagonal shift for adjacency iteration
    // A solve is declared stagnated when the bound gap shrinks by less than
    // 0.1% over this many iterations; the enclosure is still reported.
    std::size_t stagnation_window = 10000;

    void validate() const {
        if (!(tol > 0.0)) throw std::invalid_argument("solver tol must be > 0");
        if (max_iter < 1) throw std::invalid_argument("solver max_iter must be >= 1");
        if (shift < 0.0) throw std::invalid_argument("solver shift must be >= 0");
        if (stagnation_window < 1)
            throw std::invalid_argument("solver stagnation window must be >= 1");
    }
};

/// Largest H-eigenvalue estimate with its Collatz-Wielandt enclosure.
/// On success lower <= lambda <= upper with upper - lower <= tol; the
/// eigenvector has k-norm 1 and is strictly positive on connected inputs.
/// `iterations` counts iteration work summed over component solves.
struct SpectralResult {
    double lambda = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    RealVector eigenvector;
    std::size_t iterations = 0;
    double residual = 0.0;
    std::vector<std::string> flags;

    bool converged() const {
        for (const auto& f : flags)
            if (f == "stagnated" || f == "max_iterations") return false;
        return true;
    }
};

namespace detail {

inline void add_flag(SpectralResult& res, const std::string& flag) {
    for (const auto& f : res.flags)
        if (f == flag) return;
    res.flags.push_back(flag);
}

// Power iteration with Collatz-Wielandt bracketing on a connected component
// whose vertices all carry at least one edge. For positive x the ratios
// (T x)_v / x_v^{k-1} always enclose the spectral radius, so the running
// intersection of the brackets is a rigorous, monotonically shrinking
// enclosure. Iterates are normalized to max-norm 1; the adjacency tensor
// gets a diagonal shift (eigenvalues move by exactly the shift) because it
// can be non-primitive on its own.
inline SpectralResult power_iteration_connected(TensorKind kind,
                                                const UniformHypergraph& h,
                                                const SolverConfig& cfg) {
    const double shift = kind == TensorKind::Adjacency ? cfg.shift : 0.0;
    const std::size_t r = h.k - 1;

    RealVector x(h.n, 1.0);
    double lower_best = -std::numeric_limits<double>::infinity();
    double upper_best = std::numeric_limits<double>::infinity();

    SpectralResult res;
    double gap_at_checkpoint = std::numeric_limits<double>::infinity();

    for (std::size_t iter = 1; iter <= cfg.max_iter; ++iter) {
        RealVector y = apply(kind, h, x);
        if (shift != 0.0)
            for (VertexId v = 0; v < h.n; ++v) y[v] += shift * int_pow(x[v], r);

        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (VertexId v = 0; v < h.n; ++v) {
            const double ratio = y[v] / int_pow(x[v], r);
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        lower_best = std::max(lower_best, lo);
        upper_best = std::min(upper_best, hi);
        res.iterations = iter;

        const double gap = upper_best - lower_best;
        if (gap <= cfg.tol) break;
        if (iter % cfg.stagnation_window == 0) {
            if (gap > gap_at_checkpoint * (1.0 - 1e-3)) {
                add_flag(res, "stagnated");
                break;
            }
            gap_at_checkpoint = gap;
        }
        if (iter == cfg.max_iter) {
            add_flag(res, "max_iterations");
            break;
        }

        const double ymax = norm_inf(y);
        const double inv_r = 1.0 / static_cast<double>(r);
        for (VertexId v = 0; v < h.n; ++v) x[v] = std::pow(y[v] / ymax, inv_r);
    }

    res.lower = lower_best - shift;
    res.upper = upper_best - shift;
    res.lambda = 0.5 * (res.lower + res.upper);
    const double xk = norm_k(x, h.k);
    for (double& v : x) v /= xk;
    res.eigenvector = std::move(x);
    res.residual = residual(kind, h, res.lambda, res.eigenvector);
    return res;
}

// The H-spectrum of a union is the union of the component H-spectra, so the
// largest H-eigenvalue is the componentwise max and the winning component's
// eigenvector, zero-padded and renormalized to k-norm 1, is a global
// eigenvector.
inline SpectralResult merge_component_results(const UniformHypergraph& h,
                                              TensorKind kind,
                                              const std::vector<Component>& comps,
                                              std::vector<SpectralResult> results) {
    SpectralResult out;
    out.lower = -std::numeric_limits<double>::infinity();
    out.upper = -std::numeric_limits<double>::infinity();
    std::size_t winner = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        out.lower = std::max(out.lower, results[i].lower);
        out.upper = std::max(out.upper, results[i].upper);
        out.iterations += results[i].iterations;
        for (const auto& f : results[i].flags) add_flag(out, f);
        if (results[i].lambda > results[winner].lambda) winner = i;
    }
    out.lambda = 0.5 * (out.lower + out.upper);

    RealVector padded(h.n, 0.0);
    const auto& wres = results[winner];
    const auto& wmap = comps[winner].vertex_map;
    for (std::size_t i = 0; i < wmap.size(); ++i)
        padded[wmap[i]] = wres.eigenvector[i];
    const double xk = norm_k(padded, h.k);
    if (xk > 0.0)
        for (double& v : padded) v /= xk;
    out.eigenvector = std::move(padded);
    out.residual = h.n > 0 ? residual(kind, h, out.lambda, out.eigenvector) : 0.0;
    return out;
}

inline SpectralResult singleton_result() {
    SpectralResult res;
    res.eigenvector = {1.0};
    return res;
}

// Deterministic pseudo-random start for the symmetric-matrix route; the
// all-ones vector sits in the Laplacian kernel, so a structured start is
// required. Hand-rolled xorshift keeps the output identical across
// standard-library implementations.
inline RealVector seeded_start(std::size_t n) {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    RealVector x(n);
    for (std::size_t i = 0; i < n; ++i) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        x[i] = 0.5 + static_cast<double>(state >> 11) / 9007199254740992.0;  // [0.5, 1.5)
    }
    return x;
}

// Largest eigenvalue of the (positive semidefinite) Laplacian matrix of a
// connected graph by plain power iteration with Rayleigh quotients. The
// Rayleigh quotient is a rigorous lower bound; the residual radius gives the
// upper bound once the iterate has settled.
inline SpectralResult laplacian_matrix_connected(const UniformHypergraph& h,
                                                 const SolverConfig& cfg) {
    RealVector x = seeded_start(h.n);
    double nrm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
    for (double& v : x) v /= nrm;

    SpectralResult res;
    double rq = 0.0, rad = std::numeric_limits<double>::infinity();
    for (std::size_t iter = 1; iter <= cfg.max_iter; ++iter) {
        RealVector y = apply(TensorKind::Laplacian, h, x);
        rq = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
        double r2 = 0.0;
        for (VertexId v = 0; v < h.n; ++v) {
            const double d = y[v] - rq * x[v];
            r2 += d * d;
        }
        rad = std::sqrt(r2);
        res.iterations = iter;
        if (2.0 * rad <= cfg.tol) break;
        if (iter == cfg.max_iter) {
            add_flag(res, "max_iterations");
            break;
        }
        const double ynrm = std::sqrt(
            std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
        if (ynrm < 1e-300) {  // start landed in the kernel
            add_flag(res, "stagnated");
            break;
        }
        for (VertexId v = 0; v < h.n; ++v) x[v] = y[v] / ynrm;
    }
    res.lambda = rq;
    res.lower = rq - rad;
    res.upper = rq + rad;
    res.eigenvector = std::move(x);
    res.residual = residual(TensorKind::Laplacian, h, res.lambda, res.eigenvector);
    return res;
}

}  // namespace detail

/// Largest H-eigenvalue of a nonnegative hypergraph tensor (Adjacency or
/// SignlessLaplacian). Disconnected inputs decompose into components and
/// take the componentwise max; isolated vertices contribute eigenvalue 0.
/// Non-convergence is reported through the flags ("max_iterations",
/// "stagnated") together with the last rigorous enclosure, not an exception.
inline SpectralResult largest_h_eigenvalue(TensorKind kind,
                                           const UniformHypergraph& h,
                                           const SolverConfig& cfg = {}) {
    if (kind == TensorKind::Laplacian)
        throw std::invalid_argument(
            "largest_h_eigenvalue requires a nonnegative tensor kind (A or Q); "
            "use laplacian_largest");
    cfg.validate();
    if (h.n == 0) return SpectralResult{};

    std::vector<Component> comps = components(h);
    if (comps.size() == 1 && !comps[0].hypergraph.edges.empty())
        return detail::power_iteration_connected(kind, h, cfg);

    std::vector<SpectralResult> results;
    results.reserve(comps.size());
    for (const Component& c : comps)
        results.push_back(c.hypergraph.edges.empty()
                              ? detail::singleton_result()
                              : detail::power_iteration_connected(kind, c.hypergraph, cfg));
    return detail::merge_component_results(h, kind, comps, std::move(results));
}

/// Largest Laplacian H-eigenvalue on the supported inputs: ordinary graphs
/// (k = 2, direct matrix iteration) and even-uniform odd-bipartite
/// hypergraphs, where it equals the signless Laplacian value and the
/// eigenvector is the Q eigenvector with signs flipped on one side of the
/// odd bipartition. Everything else is out of scope and rejected.
inline SpectralResult laplacian_largest(const UniformHypergraph& h,
                                        const SolverConfig& cfg = {}) {
    cfg.validate();
    if (h.n == 0) return SpectralResult{};

    if (h.k == 2) {
        std::vector<Component> comps = components(h);
        std::vector<SpectralResult> results;
        results.reserve(comps.size());
        for (const Component& c : comps)
            results.push_back(c.hypergraph.edges.empty()
                                  ? detail::singleton_result()
                                  : detail::laplacian_matrix_connected(c.hypergraph, cfg));
        return detail::merge_component_results(h, TensorKind::Laplacian, comps,
                                               std::move(results));
    }

    if (h.k % 2 != 0)
        throw std::domain_error(
            "unsupported: general Laplacian H-eigenvalue out of scope "
            "(odd uniformity " + std::to_string(h.k) + ")");
    auto partition = is_odd_bipartite(h);
    if (!partition)
        throw std::domain_error(
            "unsupported: general Laplacian H-eigenvalue out of scope "
            "(no odd bipartition found)");

    SpectralResult res = largest_h_eigenvalue(TensorKind::SignlessLaplacian, h, cfg);
    for (VertexId v = 0; v < h.n; ++v)
        if (partition->in_v1[v]) res.eigenvector[v] = -res.eigenvector[v];
    res.residual = residual(TensorKind::Laplacian, h, res.lambda, res.eigenvector);
    detail::add_flag(res, "odd-bipartite-route");
    return res;
}

}  // namespace hyperspec
