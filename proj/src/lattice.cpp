#include "mwi/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace mwi {

namespace {

cplx cis(double phi) { return {std::cos(phi), std::sin(phi)}; }

void check_regime(double v, double c) {
    if (!(std::fabs(v) / c <= 1e-3))
        throw std::invalid_argument("lattice: |v|/c exceeds 1e-3 (regime violation)");
}

}  // namespace

double RamanPair::drift_velocity() const {
    if (k_plus() == 0.0) throw std::invalid_argument("RamanPair: k_plus must be nonzero");
    return omega_minus() / k_plus();
}

FieldSample standing_wave(const LaserPair& lp, double z, double t) {
    const double phi1 = lp.k0 * z;
    const double phi2 = -lp.k0 * z;
    FieldSample s;
    s.carrier_phase = -lp.omega0 * t;
    s.sum = lp.amplitude * (cis(phi1) + cis(phi2));
    s.factored = 2.0 * lp.amplitude * std::cos(lp.k0 * z);
    return s;
}

FieldSample doppler_shifted(const LaserPair& lp, double v, double z, double t) {
    const double c = lp.omega0 / lp.k0;
    check_regime(v, c);
    const double b = v / c;
    const double phi1 = lp.k0 * (1.0 - b) * z + lp.omega0 * b * t;
    const double phi2 = -lp.k0 * (1.0 + b) * z - lp.omega0 * b * t;
    FieldSample s;
    s.carrier_phase = -lp.omega0 * t;
    s.sum = lp.amplitude * (cis(phi1) + cis(phi2));
    s.factored = 2.0 * lp.amplitude * std::cos(lp.k0 * (z + v * t));
    return s;
}

FieldSample raman_lattice(const RamanPair& rp, double z, double t) {
    const double om_m = rp.omega_minus();
    const double phi1 = rp.k1 * z - om_m * t;
    const double phi2 = -rp.k2 * z + om_m * t;
    FieldSample s;
    s.carrier_phase = -rp.omega_plus() * t;
    s.sum = rp.amplitude * (cis(phi1) + cis(phi2));
    s.factored = 2.0 * rp.amplitude * std::cos(rp.k_plus() * z - om_m * t) * cis(rp.k_minus() * z);
    return s;
}

FieldSample raman_doppler(const RamanPair& rp, double v, double c, double z, double t) {
    check_regime(v, c);
    const double b = v / c;
    const double om_m = rp.omega_minus();
    // The large omega*t carrier terms are cancelled analytically; only the
    // hyperfine and Doppler residues are evaluated.
    const double phi1 = rp.k1 * (1.0 - b) * z + t * (rp.omega1 * b - om_m);
    const double phi2 = -rp.k2 * (1.0 + b) * z + t * (om_m - rp.omega2 * b);
    FieldSample s;
    s.carrier_phase = -rp.omega_plus() * t;
    s.sum = rp.amplitude * (cis(phi1) + cis(phi2));
    const double zv = z + v * t;
    s.factored =
        2.0 * rp.amplitude * std::cos(rp.k_plus() * zv - om_m * t) * cis(rp.k_minus() * zv);
    return s;
}

FieldSample chirped_lattice(const LaserPair& lp, double accel, double z, double t) {
    const double c = lp.omega0 / lp.k0;
    const double v = accel * t;
    check_regime(v, c);
    const double integral_v = 0.5 * accel * t * t;
    const double b = v / c;
    const double phi1 = lp.k0 * (1.0 - b) * z + lp.omega0 * integral_v / c;
    const double phi2 = -lp.k0 * (1.0 + b) * z - lp.omega0 * integral_v / c;
    FieldSample s;
    s.carrier_phase = -lp.omega0 * t;
    s.sum = lp.amplitude * (cis(phi1) + cis(phi2));
    s.factored = 2.0 * lp.amplitude * std::cos(lp.k0 * (z + integral_v));
    return s;
}

FieldSample chirped_raman(const RamanPair& rp, double accel, double c, double z, double t) {
    const double v = accel * t;
    check_regime(v, c);
    const double integral_v = 0.5 * accel * t * t;
    const double b = v / c;
    const double om_m = rp.omega_minus();
    const double phi1 = rp.k1 * (1.0 - b) * z + (rp.omega1 * integral_v / c - om_m * t);
    const double phi2 = -rp.k2 * (1.0 + b) * z + (om_m * t - rp.omega2 * integral_v / c);
    FieldSample s;
    s.carrier_phase = -rp.omega_plus() * t;
    s.sum = rp.amplitude * (cis(phi1) + cis(phi2));
    const double zv = z + integral_v;
    s.factored =
        2.0 * rp.amplitude * std::cos(rp.k_plus() * zv - om_m * t) * cis(rp.k_minus() * zv);
    return s;
}

double standing_wave_envelope(const LaserPair& lp, double z, double) {
    return std::cos(lp.k0 * z);
}

double doppler_envelope(const LaserPair& lp, double v, double z, double t) {
    return std::cos(lp.k0 * (z + v * t));
}

double raman_envelope(const RamanPair& rp, double v, double, double z, double t) {
    return std::cos(rp.k_plus() * (z + v * t) - rp.omega_minus() * t);
}

double chirped_envelope(const LaserPair& lp, double accel, double z, double t) {
    return std::cos(lp.k0 * (z + 0.5 * accel * t * t));
}

double find_plane(const std::function<double(double)>& envelope, double z_lo, double z_hi,
                  double tol) {
    double flo = envelope(z_lo), fhi = envelope(z_hi);
    if (flo == 0.0) return z_lo;
    if (fhi == 0.0) return z_hi;
    if (flo * fhi > 0.0)
        throw std::invalid_argument("find_plane: bracket does not change sign");
    while (z_hi - z_lo > tol) {
        const double mid = 0.5 * (z_lo + z_hi);
        if (mid == z_lo || mid == z_hi) break;   // bracket at ulp width
        const double fm = envelope(mid);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) {
            z_hi = mid;
        } else {
            z_lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (z_lo + z_hi);
}

BoostResult boost_wavevector(double k, double m, double v, double hbar) {
    if (!std::isfinite(k) || !std::isfinite(m) || !std::isfinite(v))
        throw std::invalid_argument("boost_wavevector: non-finite input");
    return {k - m * v / hbar, -(k - 2.0 * m * v / hbar)};
}

double doppler_kick_ratio(const ExperimentParams& p, double v0) {
    if (!(std::isfinite(v0) && v0 > 0.0))
        throw std::invalid_argument("doppler_kick_ratio: v0 must be > 0");
    return v0 / p.c;
}

}  // namespace mwi
