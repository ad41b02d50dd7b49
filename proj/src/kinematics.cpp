#include "mwi/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace mwi {

std::string_view to_string(Device d) {
    return d == Device::AtomKC ? "atom" : "neutron";
}

std::string_view to_string(Frame f) {
    return f == Frame::Lab ? "lab" : "freefall";
}

PathState BeamPath::evaluate(double t) const {
    if (!(t >= 0.0 && t <= duration()))
        throw std::out_of_range("BeamPath::evaluate: t outside [0, 2T]");
    for (const Segment& s : segments) {
        if (t < s.t_end) return {s.y(t), s.v(t)};
    }
    const Segment& last = segments.back();
    return {last.y(t), last.v(t)};
}

std::pair<BeamPath, BeamPath> build_paths(DeviceFrame df, const ExperimentParams& p) {
    p.validate();
    const double T = p.T;
    const double vy = p.v_y0();
    const double a = (df.frame == Frame::Lab) ? -p.g : 0.0;

    auto make_arm = [&](Arm arm) {
        const double sign = (arm == Arm::Upper) ? 1.0 : -1.0;
        BeamPath path;
        path.label = arm;
        Segment first{0.0, T, 0.0, sign * vy, a, p.v_x0};
        const double y_mid = first.y(T);
        const double v_mid = first.v(T);

        KickEvent redirect{};
        if (df.device == Device::AtomKC) {
            // Upper re-emits / lower absorbs the photon at T: delta-v = -/+ hbar*kappa/m.
            redirect = {T, KickEvent::Kind::PhotonRecoil, -sign * 2.0 * vy};
            // Splitting and recombination recoils at 0 and 2T.
            if (arm == Arm::Upper)
                path.kicks.push_back({0.0, KickEvent::Kind::PhotonRecoil, 2.0 * vy});
        } else {
            const double v_mirror = (df.frame == Frame::FreeFall) ? p.g * T : 0.0;
            redirect = {T, KickEvent::Kind::ElasticMirror, v_mirror};
        }
        path.kicks.push_back(redirect);
        if (df.device == Device::AtomKC && arm == Arm::Lower)
            path.kicks.push_back({2.0 * T, KickEvent::Kind::PhotonRecoil, -2.0 * vy});

        Segment second{T, 2.0 * T, y_mid, redirect.apply(v_mid), a, p.v_x0};
        path.segments = {first, second};
        return path;
    };

    return {make_arm(Arm::Upper), make_arm(Arm::Lower)};
}

double closure_gap(DeviceFrame df, const ExperimentParams& p) {
    auto [upper, lower] = build_paths(df, p);
    const double t_end = upper.duration();
    return std::fabs(upper.evaluate(t_end).y - lower.evaluate(t_end).y);
}

BraggEstimate bragg_acceptance_estimate(double v0, double L, const ExperimentParams& p) {
    if (!(std::isfinite(v0) && v0 > 0.0) || !(std::isfinite(L) && L > 0.0))
        throw std::invalid_argument("bragg_acceptance_estimate: v0 and L must be > 0");
    const double tf = L / v0;
    return {0.5 * p.g * tf * tf, p.g * tf / v0};
}

}  // namespace mwi
