#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include "tprop/errors.hpp"
#include "tprop/vec3.hpp"

namespace tprop {

inline double quad_norm(double v) { return std::fabs(v); }
inline double quad_norm(const std::complex<double>& v) { return std::abs(v); }
inline double quad_norm(const Vec3& v) { return norm(v); }

struct QuadratureOptions {
    double abs_tol = 1e-10;
    long max_intervals = 1L << 20;
    // refinement floor: oscillatory integrands alias the coarse Simpson
    // stencil, so callers raise this to at least log2(total phase)
    int min_depth = 2;
};

// min_depth for an integrand accumulating `phase` radians over the interval
inline int depth_for_phase(double phase) {
    int d = 2;
    while ((1 << d) < phase && d < 16) ++d;
    return d;
}

namespace detail {

template <class F, class V>
V adaptive_simpson_rec(const F& f, double a, double b, V fa, V fm, V fb, V whole,
                       double tol, int depth, int min_depth, long& budget) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    V flm = f(lm), frm = f(rm);
    double h = b - a;
    V left = (h / 12.0) * (fa + 4.0 * flm + fm);
    V right = (h / 12.0) * (fm + 4.0 * frm + fb);
    V sum = left + right;
    V err = sum - whole;
    if (depth >= min_depth && quad_norm(err) <= 15.0 * tol) {
        return sum + (1.0 / 15.0) * err;
    }
    budget -= 2;
    if (budget <= 0 || depth > 48)
        throw QuadratureFailure("adaptive_simpson: interval budget exhausted");
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, min_depth,
                                budget) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, min_depth,
                                budget);
}

}  // namespace detail

// Adaptive Simpson with absolute tolerance. Works for double, complex and
// Vec3 integrands. Throws QuadratureFailure when the interval budget runs out.
template <class F>
auto adaptive_simpson(F&& f, double a, double b, const QuadratureOptions& opt = {}) {
    using V = decltype(f(a));
    if (a == b) return V{};
    V fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    V whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
    long budget = opt.max_intervals;
    return detail::adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, opt.abs_tol, 0,
                                        opt.min_depth, budget);
}

// Fixed composite Simpson over n panels (n >= 1).
template <class F>
auto composite_simpson(F&& f, double a, double b, int n_panels) {
    using V = decltype(f(a));
    if (a == b || n_panels < 1) return V{};
    double h = (b - a) / n_panels;
    V sum = f(a) + f(b);
    for (int i = 0; i < n_panels; ++i) {
        double lo = a + i * h;
        sum = sum + 4.0 * f(lo + 0.5 * h);
        if (i > 0) sum = sum + 2.0 * f(lo);
    }
    return (h / 6.0) * sum;
}

}  // namespace tprop
