#include "mwi/lattice_grid.hpp"

#include <cmath>
#include <stdexcept>

#include "mwi/simd/sincos.hpp"

namespace mwi {

namespace {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n < 2) throw std::invalid_argument("grid: need at least 2 points");
    if (!(hi > lo)) throw std::invalid_argument("grid: need z_hi > z_lo");
    std::vector<double> z(n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) z[i] = lo + step * static_cast<double>(i);
    z.back() = hi;
    return z;
}

struct SinCos {
    std::vector<double> s, c;
};

SinCos batch(const std::vector<double>& phi) {
    SinCos out{std::vector<double>(phi.size()), std::vector<double>(phi.size())};
    simd::sincos(phi.data(), out.s.data(), out.c.data(), phi.size());
    return out;
}

}  // namespace

GridEval doppler_grid(const LaserPair& lp, double v, double t, double z_lo, double z_hi,
                      std::size_t n) {
    const double c = lp.omega0 / lp.k0;
    if (!(std::fabs(v) / c <= 1e-3))
        throw std::invalid_argument("doppler_grid: |v|/c exceeds 1e-3");

    GridEval out;
    out.z = linspace(z_lo, z_hi, n);
    const double b = v / c;

    std::vector<double> phi1(n), phi2(n), phif(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double z = out.z[i];
        phi1[i] = lp.k0 * (1.0 - b) * z + lp.omega0 * b * t;
        phi2[i] = -lp.k0 * (1.0 + b) * z - lp.omega0 * b * t;
        phif[i] = lp.k0 * (z + v * t);
    }
    const SinCos e1 = batch(phi1), e2 = batch(phi2), ef = batch(phif);

    out.sum.resize(n);
    out.factored.resize(n);
    double zmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        out.sum[i] = lp.amplitude * cplx{e1.c[i] + e2.c[i], e1.s[i] + e2.s[i]};
        out.factored[i] = 2.0 * lp.amplitude * ef.c[i];
        out.max_abs_deviation =
            std::max(out.max_abs_deviation, std::abs(out.sum[i] - out.factored[i]));
        zmax = std::max(zmax, std::fabs(out.z[i]));
    }
    // sum = factored * exp(-i omega0 v z / c^2); |e^{ix} - 1| <= |x|.
    out.dropped_term_bound = 2.0 * lp.amplitude * lp.omega0 * std::fabs(v) * zmax / (c * c);
    return out;
}

GridEval raman_grid(const RamanPair& rp, double v, double c, double t, double z_lo,
                    double z_hi, std::size_t n) {
    if (!(std::fabs(v) / c <= 1e-3))
        throw std::invalid_argument("raman_grid: |v|/c exceeds 1e-3");

    GridEval out;
    out.z = linspace(z_lo, z_hi, n);
    const double b = v / c;
    const double om_m = rp.omega_minus();

    std::vector<double> phi1(n), phi2(n), env(n), res(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double z = out.z[i];
        phi1[i] = rp.k1 * (1.0 - b) * z + t * (rp.omega1 * b - om_m);
        phi2[i] = -rp.k2 * (1.0 + b) * z + t * (om_m - rp.omega2 * b);
        const double zv = z + v * t;
        env[i] = rp.k_plus() * zv - om_m * t;
        res[i] = rp.k_minus() * zv;
    }
    const SinCos e1 = batch(phi1), e2 = batch(phi2), ee = batch(env), er = batch(res);

    out.sum.resize(n);
    out.factored.resize(n);
    double zmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        out.sum[i] = rp.amplitude * cplx{e1.c[i] + e2.c[i], e1.s[i] + e2.s[i]};
        out.factored[i] = 2.0 * rp.amplitude * ee.c[i] * cplx{er.c[i], er.s[i]};
        out.max_abs_deviation =
            std::max(out.max_abs_deviation, std::abs(out.sum[i] - out.factored[i]));
        zmax = std::max(zmax, std::fabs(out.z[i]));
    }
    // Per-beam dropped phase omega_j v z / c^2, plus an off-shell term when
    // omega_j != c k_j.
    const double off1 = std::fabs(rp.omega1 - c * rp.k1);
    const double off2 = std::fabs(rp.omega2 - c * rp.k2);
    out.dropped_term_bound =
        rp.amplitude * std::fabs(v) *
        ((rp.omega1 + rp.omega2) * zmax + (off1 + off2) * c * std::fabs(t)) / (c * c);
    return out;
}

}  // namespace mwi
