#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/power.hpp"
#include "hyperspec/solver.hpp"
#include "hyperspec/tensor.hpp"
#include "hyperspec/vec.hpp"

namespace hyperspec {

/// Witness for a strict comparison: a nonnegative vector y with
/// Q(H') y <= mu y^[k] componentwise and strict slack at some coordinate,
/// certifying lambda(Q(H')) < mu. The equality case (H a single edge) is
/// flagged instead of a strict index.
struct ComparisonCertificate {
    double mu = 0.0;
    RealVector y;
    RealVector slack;  // mu * y_i^k - (Q(H') y)_i per coordinate of H'
    std::optional<std::size_t> strict_index;
    bool equality_case = false;
};

/// Builds the pendant-insertion comparison vector from a converged signless
/// Laplacian eigenpair of a connected H: old vertices keep their component,
/// the pendant inserted into edge e_i gets min over e_i of the components
/// (ties resolved by canonical edge order, which the running min already
/// does). Verifies the componentwise inequality and locates a strictly
/// slack coordinate unless H is the single-edge sunflower S_1^k.
inline ComparisonCertificate pendant_certificate(const UniformHypergraph& h,
                                                 const SpectralResult& q_result,
                                                 double slack_tol = 1e-9,
                                                 double strict_margin = 1e-6) {
    if (h.edges.empty())
        throw std::invalid_argument("pendant_certificate requires at least one edge");
    if (components(h).size() != 1)
        throw std::invalid_argument("pendant_certificate requires a connected H");
    if (q_result.eigenvector.size() != h.n)
        throw std::invalid_argument("pendant_certificate: eigenvector dimension mismatch");
    if (!q_result.converged())
        throw std::invalid_argument("pendant_certificate requires a converged result");

    const UniformHypergraph hp = insert_pendant(h);
    const double mu = q_result.lambda;

    ComparisonCertificate cert;
    cert.mu = mu;
    cert.y.assign(hp.n, 0.0);
    for (VertexId v = 0; v < h.n; ++v) cert.y[v] = q_result.eigenvector[v];
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        double m = q_result.eigenvector[h.edges[i][0]];
        for (VertexId u : h.edges[i]) m = std::min(m, q_result.eigenvector[u]);
        cert.y[h.n + i] = m;
    }

    const RealVector qy = apply(TensorKind::SignlessLaplacian, hp, cert.y);
    cert.slack.resize(hp.n);
    for (VertexId w = 0; w < hp.n; ++w)
        cert.slack[w] = mu * int_pow(cert.y[w], hp.k - 1) - qy[w];

    double worst = 0.0, best = 0.0;
    std::size_t best_idx = 0;
    for (VertexId w = 0; w < hp.n; ++w) {
        worst = std::min(worst, cert.slack[w]);
        if (cert.slack[w] > best) {
            best = cert.slack[w];
            best_idx = w;
        }
    }
    if (worst < -slack_tol)
        throw std::runtime_error(
            "pendant_certificate: negative slack " + std::to_string(worst) +
            " indicates an unconverged input eigenpair");

    // Equality holds exactly for the single-edge sunflower S_1^k.
    cert.equality_case = h.edge_count() == 1 && h.n == h.k;
    if (!cert.equality_case) {
        if (best <= strict_margin)
            throw std::runtime_error(
                "pendant_certificate: no strictly slack coordinate found "
                "(max slack " + std::to_string(best) + ")");
        cert.strict_index = best_idx;
    }
    return cert;
}

}  // namespace hyperspec
