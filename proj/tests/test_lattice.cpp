#include <cmath>

#include "doctest.h"
#include "mwi/lattice.hpp"
#include "mwi/lattice_grid.hpp"

using namespace mwi;

namespace {
const LaserPair kLp = LaserPair::plain(1.6e7);
const double kPeriod = M_PI / kLp.k0;   // node spacing of the standing wave
}  // namespace

TEST_CASE("standing wave: exact sum equals the factored cosine") {
    for (double z : {0.0, 3.7e-8, 1.9e-7}) {
        for (double t : {0.0, 1e-12, 5e-9}) {
            const FieldSample s = standing_wave(kLp, z, t);
            CHECK(std::abs(s.sum - s.factored) <= 1e-15);
            CHECK(s.carrier_phase == -kLp.omega0 * t);
        }
    }
}

TEST_CASE("doppler pair reduces bitwise to the standing wave at v = 0") {
    const FieldSample a = standing_wave(kLp, 5.5e-8, 3e-9);
    const FieldSample b = doppler_shifted(kLp, 0.0, 5.5e-8, 3e-9);
    CHECK(a.sum == b.sum);
    CHECK(a.factored == b.factored);
}

TEST_CASE("doppler factored form is exact up to the analytic dropped term") {
    const GridEval g = doppler_grid(kLp, 3000.0, 2e-9, -1e-5, 1e-5, 10001);
    CHECK(g.max_abs_deviation <= g.dropped_term_bound);
    CHECK(g.dropped_term_bound > 0.0);
}

TEST_CASE("raman pair reduces bitwise to the plain pair at k1=k2, omega1=omega2") {
    const RamanPair rp{kLp.k0, kLp.k0, kLp.omega0, kLp.omega0, kLp.amplitude};
    for (double z : {0.0, 4.2e-8}) {
        for (double t : {0.0, 7e-10}) {
            CHECK(raman_lattice(rp, z, t).sum == standing_wave(kLp, z, t).sum);
            CHECK(raman_doppler(rp, 25.0, constants::c, z, t).sum ==
                  doppler_shifted(kLp, 25.0, z, t).sum);
        }
    }
}

TEST_CASE("raman factored form stays within the omega_plus-scaled bound") {
    // Slightly asymmetric pair with a hyperfine splitting.
    const RamanPair rp{1.6e7, 1.599999e7, constants::c * 1.6e7, constants::c * 1.599999e7};
    const GridEval g = raman_grid(rp, 3000.0, constants::c, 1e-9, -1e-5, 1e-5, 10001);
    CHECK(g.max_abs_deviation <= g.dropped_term_bound);
}

TEST_CASE("chirped pair at accel = 0 reduces bitwise to the v = 0 doppler form") {
    const FieldSample a = chirped_lattice(kLp, 0.0, 7.7e-8, 2e-9);
    const FieldSample b = doppler_shifted(kLp, 0.0, 7.7e-8, 2e-9);
    CHECK(a.sum == b.sum);
    CHECK(a.factored == b.factored);
}

TEST_CASE("chirped lattice planes free-fall exactly with the chirp acceleration") {
    const double accel = 9.8;
    const double z0 = 0.5 * kPeriod;   // first node at t = 0
    for (double t : {0.0, 0.05, 0.1, 0.2}) {
        const double expected = z0 - 0.5 * accel * t * t;
        const double got = find_plane(
            [&](double z) { return chirped_envelope(kLp, accel, z, t); },
            expected - 0.4 * kPeriod, expected + 0.4 * kPeriod, 1e-16);
        // Tracking tolerance: (v(t_max)/c) * lattice period.
        CHECK(std::fabs(got - expected) <= (accel * 0.2 / constants::c) * kPeriod + 1e-15);
    }
}

TEST_CASE("find_plane rejects a bracket with no sign change") {
    CHECK_THROWS_AS(find_plane([](double) { return 1.0; }, 0.0, 1.0, 1e-12),
                    std::invalid_argument);
}

TEST_CASE("regime guard rejects relativistic velocities") {
    CHECK_THROWS_AS(doppler_shifted(kLp, 0.01 * constants::c, 0.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(chirped_lattice(kLp, 3e6, 0.0, 0.2), std::invalid_argument);
}

TEST_CASE("boost round trip restores the wavevector") {
    const double m = 1.675e-27, v = 37.5, k = 3.2e10;
    const BoostResult fwd = boost_wavevector(k, m, v);
    const BoostResult back = boost_wavevector(fwd.k_boosted, m, -v);
    CHECK(back.k_boosted == doctest::Approx(k).epsilon(1e-12));
    // Mirror bounce in the mirror frame is plain reversal.
    const BoostResult at_rest = boost_wavevector(k, m, 0.0);
    CHECK(at_rest.k_reflected == -k);
}

TEST_CASE("doppler kick ratio is small and dimensionless") {
    const ExperimentParams p{2.2e-25, 9.8, 0.1, 1.6e7};
    const double r = doppler_kick_ratio(p, 1e3);
    CHECK(r > 1e-6);
    CHECK(r < 1e-5);
    CHECK_THROWS_AS(doppler_kick_ratio(p, -1.0), std::invalid_argument);
}

TEST_CASE("raman drift velocity and momentum transfer") {
    const RamanPair rp{1.6e7, 1.6e7, constants::c * 1.6e7 + 1e10, constants::c * 1.6e7 - 1e10};
    CHECK(rp.drift_velocity() == doctest::Approx(1e10 / 1.6e7));
    CHECK(rp.momentum_transfer(constants::hbar) ==
          doctest::Approx(constants::hbar * 3.2e7));
    const RamanPair degenerate{1.0, -1.0, 1.0, 1.0};
    CHECK_THROWS_AS(degenerate.drift_velocity(), std::invalid_argument);
}
