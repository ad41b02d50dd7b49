#pragma once

#include "mwi/kinematics.hpp"
#include "mwi/quadrature.hpp"

namespace mwi {

// Elapsed proper time per arm and its arm difference. The zeroth-order rest
// term 2T is excluded unless includes_rest_term is set; it is common to both
// beams and never enters delta_tau.
struct ProperTimeResult {
    double tau_upper = 0.0;
    double tau_lower = 0.0;
    double delta_tau = 0.0;       // upper - lower
    double redshift_part = 0.0;   // potential contribution to delta_tau
    double velocity_part = 0.0;   // kinetic (twin-paradox) contribution
    bool includes_rest_term = false;
};

// First-order-in-g closed forms: zero difference for the atom device,
// 4*v_y0*g*T^2/c^2 for the neutron device, in either frame.
ProperTimeResult proper_time_closed_form(DeviceFrame df, const ExperimentParams& p,
                                         bool include_rest_term = false);

// Quadrature of d(tau) = (1 + U/c^2 - v^2/2c^2) dt on the exact piecewise
// trajectories. potential_offset adds a constant to U (common-mode check).
ProperTimeResult proper_time_oracle(DeviceFrame df, const ExperimentParams& p,
                                    const QuadratureSpec& q,
                                    bool include_rest_term = false,
                                    double potential_offset = 0.0);

struct FrameComparison {
    ProperTimeResult lab;
    ProperTimeResult freefall;
    double max_discrepancy;   // |delta_tau_lab - delta_tau_freefall|
};

FrameComparison frame_invariance_check(Device device, const ExperimentParams& p,
                                       const QuadratureSpec& q);

}  // namespace mwi
