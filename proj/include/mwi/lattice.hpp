#pragma once

#include <complex>
#include <functional>

#include "mwi/params.hpp"

namespace mwi {

using cplx = std::complex<double>;

// Counter-propagating pair of equal-frequency lasers.
struct LaserPair {
    double k0;          // 1/m
    double omega0;      // rad/s
    double amplitude = 1.0;

    static LaserPair plain(double k0, double c = constants::c, double amplitude = 1.0) {
        if (!(k0 > 0.0)) throw std::invalid_argument("LaserPair: k0 must be > 0");
        return {k0, c * k0, amplitude};
    }
};

// Two-frequency Raman pair; the hyperfine splitting omega1 - omega2 is tiny
// compared to omega_plus.
struct RamanPair {
    double k1, k2;          // 1/m
    double omega1, omega2;  // rad/s
    double amplitude = 1.0;

    double k_plus() const { return 0.5 * (k1 + k2); }
    double k_minus() const { return 0.5 * (k1 - k2); }
    double omega_plus() const { return 0.5 * (omega1 + omega2); }
    double omega_minus() const { return 0.5 * (omega1 - omega2); }
    double drift_velocity() const;                    // v_L = omega_minus / k_plus
    double momentum_transfer(double hbar) const {     // per transition
        return hbar * (std::abs(k1) + std::abs(k2));
    }
};

// Complex field value at (z, t) with the common fast carrier pulled out:
// full field = carrier * value, carrier = exp(i * carrier_phase),
// carrier_phase = -omega0*t (plain) or -omega_plus*t (Raman). Both the exact
// two-exponential sum and the factored closed form are returned.
struct FieldSample {
    cplx sum;
    cplx factored;
    double carrier_phase;

    cplx sum_full() const { return std::polar(1.0, carrier_phase) * sum; }
    cplx factored_full() const { return std::polar(1.0, carrier_phase) * factored; }
};

FieldSample standing_wave(const LaserPair& lp, double z, double t);

// Doppler-compensated pair for a particle moving at constant v; the factored
// form drops a phase omega0*v*z/c^2.
FieldSample doppler_shifted(const LaserPair& lp, double v, double z, double t);

FieldSample raman_lattice(const RamanPair& rp, double z, double t);
FieldSample raman_doppler(const RamanPair& rp, double v, double c, double z, double t);

// Frequency ramp for a uniformly accelerating particle: v -> accel*t,
// v*t -> accel*t^2/2. With accel = g the lattice planes free-fall.
FieldSample chirped_lattice(const LaserPair& lp, double accel, double z, double t);
FieldSample chirped_raman(const RamanPair& rp, double accel, double c, double z, double t);

// Signed envelope (the cosine factor of the exact field); its zeros are the
// lattice planes.
double standing_wave_envelope(const LaserPair& lp, double z, double t);
double doppler_envelope(const LaserPair& lp, double v, double z, double t);
double raman_envelope(const RamanPair& rp, double v, double c, double z, double t);
double chirped_envelope(const LaserPair& lp, double accel, double z, double t);

// Bisection for an envelope zero inside [z_lo, z_hi]; the bracket must change
// sign. tol is absolute in z.
double find_plane(const std::function<double(double)>& envelope, double z_lo, double z_hi,
                  double tol);

struct BoostResult {
    double k_boosted;     // matter wavevector in the frame moving at v
    double k_reflected;   // reflection off a mirror moving at v, back in the original frame
};

// Galilean boost of a matter wave: k' = k - m v / hbar, k_r = -(k - 2 m v / hbar).
BoostResult boost_wavevector(double k, double m, double v, double hbar = constants::hbar);

// Fractional Doppler kick (photon) over fractional mirror-bounce kick: v0/c.
double doppler_kick_ratio(const ExperimentParams& p, double v0);

}  // namespace mwi
