#include "mwi/propertime.hpp"

#include <cmath>

namespace mwi {

ProperTimeResult proper_time_closed_form(DeviceFrame df, const ExperimentParams& p,
                                         bool include_rest_term) {
    p.validate();
    const double c2 = p.c * p.c;
    const double unit = p.v_y0() * p.g * p.T * p.T / c2;

    ProperTimeResult r;
    r.includes_rest_term = include_rest_term;
    switch (df.device) {
        case Device::AtomKC:
            if (df.frame == Frame::Lab) {
                // Red shift and twin-paradox contributions cancel exactly.
                r.redshift_part = 2.0 * unit;
                r.velocity_part = -2.0 * unit;
            }
            break;
        case Device::NeutronCOW:
            if (df.frame == Frame::Lab) {
                r.redshift_part = 2.0 * unit;
                r.velocity_part = 2.0 * unit;
            } else {
                r.redshift_part = 0.0;
                r.velocity_part = 4.0 * unit;
            }
            break;
    }
    r.delta_tau = r.redshift_part + r.velocity_part;

    const double v0sq = p.v_y0() * p.v_y0() + p.v_x0 * p.v_x0;
    const double common = (include_rest_term ? 2.0 * p.T : 0.0) - v0sq * p.T / c2;
    r.tau_upper = common + 0.5 * r.delta_tau;
    r.tau_lower = common - 0.5 * r.delta_tau;
    return r;
}

namespace {

struct ArmIntegrals {
    double potential;   // integral of U/c^2 dt
    double kinetic;     // integral of -v^2/(2 c^2) dt  (v includes v_x)
};

ArmIntegrals integrate_arm(const BeamPath& path, Frame frame, const ExperimentParams& p,
                           const QuadratureSpec& q, double potential_offset) {
    const double c2 = p.c * p.c;
    ArmIntegrals out{0.0, 0.0};
    for (const Segment& s : path.segments) {
        out.potential += integrate(
            [&](double t) {
                const double u = (frame == Frame::Lab ? p.g * s.y(t) : 0.0) + potential_offset;
                return u / c2;
            },
            s.t_start, s.t_end, q);
        out.kinetic += integrate(
            [&](double t) {
                const double vy = s.v(t);
                return -0.5 * (vy * vy + s.v_x * s.v_x) / c2;
            },
            s.t_start, s.t_end, q);
    }
    return out;
}

}  // namespace

ProperTimeResult proper_time_oracle(DeviceFrame df, const ExperimentParams& p,
                                    const QuadratureSpec& q, bool include_rest_term,
                                    double potential_offset) {
    auto [upper, lower] = build_paths(df, p);
    const ArmIntegrals iu = integrate_arm(upper, df.frame, p, q, potential_offset);
    const ArmIntegrals il = integrate_arm(lower, df.frame, p, q, potential_offset);

    ProperTimeResult r;
    r.includes_rest_term = include_rest_term;
    const double rest = include_rest_term ? upper.duration() : 0.0;
    r.tau_upper = rest + iu.potential + iu.kinetic;
    r.tau_lower = rest + il.potential + il.kinetic;
    r.redshift_part = iu.potential - il.potential;
    r.velocity_part = iu.kinetic - il.kinetic;
    r.delta_tau = r.tau_upper - r.tau_lower;
    return r;
}

FrameComparison frame_invariance_check(Device device, const ExperimentParams& p,
                                       const QuadratureSpec& q) {
    FrameComparison cmp{
        proper_time_oracle({device, Frame::Lab}, p, q),
        proper_time_oracle({device, Frame::FreeFall}, p, q),
        0.0,
    };
    cmp.max_discrepancy = std::fabs(cmp.lab.delta_tau - cmp.freefall.delta_tau);
    return cmp;
}

}  // namespace mwi
