#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace hyperspec {

/// Closed-form description of the largest signless Laplacian H-eigenvalue of
/// the sunflower S_d^k: lambda is the largest real root of
/// (lambda - d)(lambda - 1)^{k-1} = d, and (heart, pendant) solve the two
/// eigen-equations with the pendant component normalized to 1.
struct SunflowerSystem {
    std::size_t d = 1;
    std::size_t k = 2;
    double heart = 1.0;    // eigenvector component on the heart
    double pendant = 1.0;  // shared component on the pendant vertices
    double lambda = 2.0;
};

/// Bisection on the bracket [d, 2d]: f(d) = -d < 0 and f(2d) >= 0, and f is
/// strictly increasing beyond lambda = d, so the bracket holds exactly the
/// largest real root. Bisection rather than Newton keeps the iteration away
/// from the flat region near lambda = 1.
inline SunflowerSystem sunflower_q_lambda(std::size_t d, std::size_t k) {
    if (d < 1) throw std::invalid_argument("sunflower_q_lambda requires d >= 1");
    if (k < 2) throw std::invalid_argument("sunflower_q_lambda requires k >= 2");

    const double dd = static_cast<double>(d);
    const double ex = static_cast<double>(k - 1);
    auto f = [&](double lam) { return (lam - dd) * std::pow(lam - 1.0, ex) - dd; };

    double lo = dd, hi = 2.0 * dd;
    for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }

    SunflowerSystem sys;
    sys.d = d;
    sys.k = k;
    sys.lambda = 0.5 * (lo + hi);
    sys.pendant = 1.0;
    sys.heart = sys.lambda - 1.0;  // from the pendant eigen-equation with b = 1
    return sys;
}

}  // namespace hyperspec
