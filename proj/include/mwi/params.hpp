#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace mwi {

namespace constants {
inline constexpr double c = 2.99792458e8;          // m/s
inline constexpr double hbar = 1.054571817e-34;    // J*s
}  // namespace constants

// Shared physical inputs for both interferometers. All SI.
//
// The vertical launch speed is always the recoil value v_y0 = hbar*kappa/(2m);
// v_x0 is a free horizontal speed (zero for the atom device, the beam speed
// for the neutron device).
struct ExperimentParams {
    double m;             // particle rest mass (kg)
    double g;             // gravitational acceleration magnitude (m/s^2)
    double T;             // inter-pulse / inter-ear transit time (s)
    double kappa;         // effective photon / lattice wavenumber (1/m)
    double v_x0 = 0.0;    // horizontal speed (m/s)
    double c = constants::c;
    double hbar = constants::hbar;

    double v_y0() const { return hbar * kappa / (2.0 * m); }
    double d() const { return 0.5 * g * T * T; }          // drop over one leg
    double fringe_phase() const { return kappa * g * T * T; }   // R
    double compton_frequency() const { return m * c * c / hbar; }

    void validate() const {
        auto positive = [](double x, const char* name) {
            if (!(std::isfinite(x) && x > 0.0))
                throw std::invalid_argument(std::string(name) + " must be finite and > 0");
        };
        positive(m, "m");
        positive(T, "T");
        positive(kappa, "kappa");
        positive(c, "c");
        positive(hbar, "hbar");
        if (!(std::isfinite(g) && g >= 0.0))
            throw std::invalid_argument("g must be finite and >= 0");
        if (!(std::isfinite(v_x0) && v_x0 >= 0.0))
            throw std::invalid_argument("v_x0 must be finite and >= 0");
        if (!(v_y0() / c < 1e-3))
            throw std::invalid_argument("v_y0/c must stay below 1e-3 (weak-field, slow-motion regime)");
    }
};

}  // namespace mwi
