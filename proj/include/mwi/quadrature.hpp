#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mwi {

struct QuadratureSpec {
    enum class Method { GaussFixed, AdaptiveSimpson };
    Method method = Method::GaussFixed;
    double rel_tol = 1e-12;
    double abs_tol = 1e-30;
    int gauss_panels = 4;      // GaussFixed: 20-point rule per panel
    int max_depth = 48;        // AdaptiveSimpson recursion limit

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
            throw std::invalid_argument("QuadratureSpec: tolerances must be > 0");
    }
};

namespace detail {

// 20-point Gauss-Legendre nodes/weights on [-1, 1], computed once by Newton
// iteration on the Legendre recurrence.
struct Gauss20 {
    std::array<double, 20> x{}, w{};
    Gauss20() {
        constexpr int n = 20;
        for (int i = 0; i < (n + 1) / 2; ++i) {
            double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = 0.0;
                for (int j = 0; j < n; ++j) {
                    const double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
                }
                pp = n * (z * p0 - p1) / (z * z - 1.0);
                const double dz = p0 / pp;
                z -= dz;
                if (std::fabs(dz) < 1e-15) break;
            }
            x[i] = -z;
            x[n - 1 - i] = z;
            w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
        }
    }
};

inline const Gauss20& gauss20() {
    static const Gauss20 rule;
    return rule;
}

template <class F>
double gauss_panel(F&& f, double a, double b) {
    const auto& rule = gauss20();
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < 20; ++i) acc += rule.w[i] * f(mid + half * rule.x[i]);
    return acc * half;
}

inline double simpson(double a, double fa, double fm, double b, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adaptive_simpson(F&& f, double a, double fa, double m, double fm, double b, double fb,
                        double whole, double eps, int depth, int max_depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, fa, flm, m, fm);
    const double right = simpson(m, fm, frm, b, fb);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
    if (depth >= max_depth)
        throw std::runtime_error("adaptive Simpson quadrature failed to converge");
    return adaptive_simpson(f, a, fa, lm, flm, m, fm, left, 0.5 * eps, depth + 1, max_depth) +
           adaptive_simpson(f, m, fm, rm, frm, b, fb, right, 0.5 * eps, depth + 1, max_depth);
}

}  // namespace detail

template <class F>
double integrate(F&& f, double a, double b, const QuadratureSpec& q) {
    q.validate();
    if (a == b) return 0.0;
    if (q.method == QuadratureSpec::Method::GaussFixed) {
        const int n = std::max(1, q.gauss_panels);
        double acc = 0.0;
        const double h = (b - a) / n;
        for (int i = 0; i < n; ++i) acc += detail::gauss_panel(f, a + i * h, a + (i + 1) * h);
        return acc;
    }
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = detail::simpson(a, fa, fm, b, fb);
    const double eps = std::max(q.abs_tol, q.rel_tol * std::fabs(whole));
    return detail::adaptive_simpson(f, a, fa, m, fm, b, fb, whole, eps, 0, q.max_depth);
}

}  // namespace mwi
