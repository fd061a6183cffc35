#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hyperspec {

using RealVector = std::vector<double>;

/// x^r by repeated multiplication; exact for integer exponents and
/// deterministic across libm implementations.
inline double int_pow(double x, std::size_t r) {
    double acc = 1.0;
    double base = x;
    while (r > 0) {
        if (r & 1) acc *= base;
        base *= base;
        r >>= 1;
    }
    return acc;
}

/// Componentwise power x^[r].
inline RealVector elementwise_pow(const RealVector& x, std::size_t r) {
    RealVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = int_pow(x[i], r);
    return out;
}

inline double norm_inf(const RealVector& x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
}

/// k-norm (sum |x_i|^k)^(1/k).
inline double norm_k(const RealVector& x, std::size_t k) {
    if (k == 0) throw std::invalid_argument("norm_k requires k >= 1");
    double s = 0.0;
    for (double v : x) s += int_pow(std::abs(v), k);
    return std::pow(s, 1.0 / static_cast<double>(k));
}

}  // namespace hyperspec
