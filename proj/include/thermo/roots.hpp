#pragma once

#include "thermo/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace thermo::roots {

/// Bisection on a bracket with f(a) f(b) <= 0. Stops once the bracket is
/// narrower than xtol, f hits zero, or the midpoint stops moving.
template <class F>
double bisect(F&& f, double a, double b, double fa, double fb, double xtol = 1e-12,
              int max_iter = 300) {
    require(fa * fb <= 0.0, "bisect: root not bracketed");
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    for (int it = 0; it < max_iter && std::abs(b - a) > xtol; ++it) {
        const double m = 0.5 * (a + b);
        if (m <= std::min(a, b) || m >= std::max(a, b)) break;
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm < 0.0) == (fa < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
    }
    return 0.5 * (a + b);
}

/// Uniform grid of n nodes on [lo, hi], endpoints included.
inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
    require(n >= 2, "linspace: need at least two nodes");
    std::vector<double> x(n);
    const double h = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) x[i] = lo + h * static_cast<double>(i);
    x.back() = hi;
    return x;
}

/// All roots of f on [lo, hi] found by sign-change scan over n nodes and
/// bisection; nodes where f is exactly zero are returned as is.
template <class F>
std::vector<double> scan_roots(F&& f, double lo, double hi, std::size_t n, double xtol = 1e-12) {
    const auto x = linspace(lo, hi, n);
    std::vector<double> fx(n);
    for (std::size_t i = 0; i < n; ++i) fx[i] = f(x[i]);
    std::vector<double> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (fx[i] == 0.0) {
            out.push_back(x[i]);
            continue;
        }
        if (i + 1 < n && fx[i + 1] != 0.0 && (fx[i] < 0.0) != (fx[i + 1] < 0.0)) {
            out.push_back(bisect(f, x[i], x[i + 1], fx[i], fx[i + 1], xtol));
        }
    }
    return out;
}

}  // namespace thermo::roots
