// Adaptive Simpson quadrature for scalar integrands.
#pragma once

#include <cmath>
#include <functional>

namespace inls {

namespace detail {

inline double simpson(const std::function<double(double)>& f, double a, double fa,
                      double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adapt(const std::function<double(double)>& f, double a, double b,
                    double fa, double fb, double fm, double whole, double tol,
                    int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(f, a, fa, m, fm, flm);
    double right = simpson(f, m, fm, b, fb, frm);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adapt(f, a, m, fa, fm, flm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, b, fm, fb, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Splits [a, b] into panels before adapting, so narrow features are not
// missed by the first coarse Simpson estimate.
inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double tol = 1e-12, int max_depth = 50,
                               int panels = 64) {
    double total = 0.0;
    double h = (b - a) / panels;
    for (int i = 0; i < panels; ++i) {
        double x0 = a + i * h, x1 = a + (i + 1) * h;
        double fa = f(x0), fb = f(x1), fm = f(0.5 * (x0 + x1));
        double whole = detail::simpson(f, x0, fa, x1, fb, fm);
        total += detail::adapt(f, x0, x1, fa, fb, fm, whole, tol / panels, max_depth);
    }
    return total;
}

}  // namespace inls
