#pragma once

#include <span>

#include "mwi/kinematics.hpp"
#include "mwi/propertime.hpp"
#include "mwi/quadrature.hpp"

namespace mwi {

// Geometry converting a vertical displacement of the recombined packet into a
// detected fringe phase: kappa = 2 k sin(theta) = 4 pi / ell.
struct DetectionGeometry {
    double theta;    // beam half-angle (rad)
    double lambda;   // de Broglie wavelength (m)
    double ell;      // fringe period along the detection line (m)

    static DetectionGeometry from_theta_lambda(double theta, double lambda);
    static DetectionGeometry from_kappa_theta(double kappa, double theta);

    double kappa() const { return 4.0 * M_PI / ell; }
};

// Detected fringe shift of the two-beam pattern: half the relative phase,
// phi = kappa * delta_y / 2.
double phase_from_displacement(const DetectionGeometry& geom, double delta_y);

struct ChirpSetting {
    bool enabled = false;
    double omega_dot = 0.0;   // relative laser chirp rate (rad/s^2)
};

struct PhaseBreakdown {
    double total = 0.0;
    double proper_time_phase = 0.0;   // detected share of the proper-time difference
    double sliding_phase = 0.0;       // packet vs analyzer displacement
    double laser_phase = 0.0;         // accumulated chirp phase
    double golden_rule_phase = 0.0;   // independent perturbative route
    double route_agreement = 0.0;     // max pairwise spread of applicable routes
};

// First-order perturbative phase: -(1/hbar) * integral of (U_u - U_l) dt on
// the unperturbed (g = 0) trajectories. Closed form and quadrature variants.
double golden_rule_phase(DeviceFrame df, const ExperimentParams& p);
double golden_rule_phase_quadrature(DeviceFrame df, const ExperimentParams& p,
                                    const QuadratureSpec& q);

// Magnitude bound on the neglected trajectory-bending term: sum over arm
// segments of k * (arc length - chord length), perturbed vs straight path to
// the same endpoint. Scales as g^2.
double trajectory_term_residual(DeviceFrame df, const ExperimentParams& p,
                                const QuadratureSpec& q);

// Full phase bookkeeping when the laser exchanges momentum/energy with the
// atom on alternating halves: the k*s and omega*T terms cancel identically
// between arms and only the potential-difference integral survives.
PhaseBreakdown energy_bookkeeping_phase(const ExperimentParams& p, double k_lower,
                                        double omega_lower, double omega_hyperfine);

// Detected fringe phase with per-configuration route decomposition; always
// -kappa*g*T^2 with chirp off. Chirp is defined for the atom device only.
PhaseBreakdown detected_phase(DeviceFrame df, const ExperimentParams& p,
                              ChirpSetting chirp = {});

// Max spread of the detected atom phase across masses at fixed kappa, g, T.
double mass_independence_check(const ExperimentParams& p, std::span<const double> masses);

struct NeutronPhases {
    double relative_phase;   // (m c^2/hbar) * delta_tau = 2 kappa g T^2
    double detected;         // half of it, matching |golden_rule_phase|
};

NeutronPhases neutron_phase_consistency(const ExperimentParams& p);

}  // namespace mwi
