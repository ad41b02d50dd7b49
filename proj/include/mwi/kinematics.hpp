#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "mwi/params.hpp"

namespace mwi {

enum class Device { AtomKC, NeutronCOW };
enum class Frame { Lab, FreeFall };
enum class Arm { Upper, Lower };

struct DeviceFrame {
    Device device;
    Frame frame;
};

std::string_view to_string(Device d);
std::string_view to_string(Frame f);

// One stretch of uniform vertical acceleration between kicks.
struct Segment {
    double t_start, t_end;
    double y0;     // height at t_start (m)
    double v0;     // vertical velocity at t_start (m/s)
    double a;      // vertical acceleration (-g in lab, 0 in free fall)
    double v_x;    // constant horizontal velocity

    double y(double t) const {
        const double dt = t - t_start;
        return y0 + v0 * dt + 0.5 * a * dt * dt;
    }
    double v(double t) const { return v0 + a * (t - t_start); }
};

// Impulsive velocity change. PhotonRecoil adds a fixed delta-v (the
// gravity-acquired momentum passes through unchanged); ElasticMirror
// reverses the velocity and adds twice the mirror speed.
struct KickEvent {
    enum class Kind { PhotonRecoil, ElasticMirror };
    double t;
    Kind kind;
    double value;   // delta-v for PhotonRecoil, mirror speed for ElasticMirror

    double apply(double v_before) const {
        return kind == Kind::PhotonRecoil ? v_before + value : -v_before + 2.0 * value;
    }
};

struct PathState {
    double y;
    double v;
};

// One interferometer arm over [0, 2T]: segments tile the interval, kicks sit
// at the boundaries. Immutable after construction.
struct BeamPath {
    std::vector<Segment> segments;
    std::vector<KickEvent> kicks;
    Arm label;

    double duration() const { return segments.back().t_end; }

    // Piecewise-exact position and velocity; post-kick velocity at kick instants.
    PathState evaluate(double t) const;
};

std::pair<BeamPath, BeamPath> build_paths(DeviceFrame df, const ExperimentParams& p);

// |y_upper(2T) - y_lower(2T)|; zero in this piecewise-closed-form model.
double closure_gap(DeviceFrame df, const ExperimentParams& p);

struct BraggEstimate {
    double drop;        // gravitational fall between ears (m)
    double deflection;  // resulting beam deflection (rad)
};

// Order-of-magnitude check that the fallen neutron still satisfies the
// Laue acceptance: drop = g(L/v0)^2/2, deflection = g(L/v0)/v0.
BraggEstimate bragg_acceptance_estimate(double v0, double L, const ExperimentParams& p);

}  // namespace mwi
