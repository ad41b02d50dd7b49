#include <cmath>

#include "doctest.h"
#include "mwi/kinematics.hpp"

using namespace mwi;

namespace {
const ExperimentParams kP{2.2e-25, 9.8, 0.1, 1.6e7};
}

TEST_CASE("end heights match the closed forms in every configuration") {
    const double gT2 = kP.g * kP.T * kP.T;
    struct Case {
        DeviceFrame df;
        double y_end;
    };
    const Case cases[] = {
        {{Device::AtomKC, Frame::Lab}, -2.0 * gT2},
        {{Device::AtomKC, Frame::FreeFall}, 0.0},
        {{Device::NeutronCOW, Frame::Lab}, 0.0},
        {{Device::NeutronCOW, Frame::FreeFall}, 2.0 * gT2},
    };
    for (const Case& c : cases) {
        auto [upper, lower] = build_paths(c.df, kP);
        const double t_end = upper.duration();
        CHECK(upper.evaluate(t_end).y == doctest::Approx(c.y_end).epsilon(1e-12));
        CHECK(lower.evaluate(t_end).y == doctest::Approx(c.y_end).epsilon(1e-12));
        CHECK(closure_gap(c.df, kP) <= 1e-12 * std::max(1.0, std::fabs(c.y_end)));
    }
}

TEST_CASE("free-fall and lab descriptions differ by the falling-frame shift") {
    for (Device dev : {Device::AtomKC, Device::NeutronCOW}) {
        auto [u_lab, l_lab] = build_paths({dev, Frame::Lab}, kP);
        auto [u_ff, l_ff] = build_paths({dev, Frame::FreeFall}, kP);
        for (double t : {0.0, 0.03, 0.09, 0.11, 0.17, 0.2}) {
            const double shift = 0.5 * kP.g * t * t;
            CHECK(u_ff.evaluate(t).y - u_lab.evaluate(t).y ==
                  doctest::Approx(shift).epsilon(1e-12));
            CHECK(l_ff.evaluate(t).y - l_lab.evaluate(t).y ==
                  doctest::Approx(shift).epsilon(1e-12));
            CHECK(u_ff.evaluate(t).v - u_lab.evaluate(t).v ==
                  doctest::Approx(kP.g * t).epsilon(1e-12));
        }
    }
}

TEST_CASE("arms launch symmetrically at the recoil velocity") {
    auto [upper, lower] = build_paths({Device::AtomKC, Frame::FreeFall}, kP);
    CHECK(upper.evaluate(0.0).v == doctest::Approx(kP.v_y0()));
    CHECK(lower.evaluate(0.0).v == doctest::Approx(-kP.v_y0()));
}

TEST_CASE("kick models") {
    const KickEvent recoil{0.1, KickEvent::Kind::PhotonRecoil, 2.0};
    CHECK(recoil.apply(-3.0) == -1.0);
    const KickEvent mirror{0.1, KickEvent::Kind::ElasticMirror, 0.5};
    CHECK(mirror.apply(-3.0) == 4.0);   // reverse plus twice the mirror speed
}

TEST_CASE("evaluate rejects times outside the run") {
    auto [upper, lower] = build_paths({Device::AtomKC, Frame::Lab}, kP);
    CHECK_THROWS_AS(upper.evaluate(-0.01), std::out_of_range);
    CHECK_THROWS_AS(lower.evaluate(0.21), std::out_of_range);
}

TEST_CASE("bragg acceptance estimate") {
    const BraggEstimate est = bragg_acceptance_estimate(1e3, 1e-2, kP);
    CHECK(est.drop == doctest::Approx(4.9e-10));
    CHECK(est.deflection == doctest::Approx(9.8e-8));
    CHECK_THROWS_AS(bragg_acceptance_estimate(-1.0, 1e-2, kP), std::invalid_argument);
}

TEST_CASE("invalid parameters are rejected") {
    ExperimentParams bad = kP;
    bad.T = -1.0;
    CHECK_THROWS_AS(build_paths({Device::AtomKC, Frame::Lab}, bad), std::invalid_argument);
    bad = kP;
    bad.kappa = 1e16;   // v_y0/c out of regime
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
