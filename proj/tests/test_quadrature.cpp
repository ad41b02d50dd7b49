#include <cmath>

#include "doctest.h"
#include "mwi/quadrature.hpp"

using namespace mwi;

TEST_CASE("gauss rule is exact on polynomials") {
    QuadratureSpec q{};
    // Degree 7 over [-2, 3]; a single 20-point panel integrates up to degree 39.
    auto f = [](double x) { return 1.0 + x - 2.0 * x * x + 0.5 * x * x * x * x * x * x * x; };
    auto F = [](double x) {
        return x + 0.5 * x * x - 2.0 / 3.0 * x * x * x + 0.0625 * x * x * x * x * x * x * x * x;
    };
    const double exact = F(3.0) - F(-2.0);
    CHECK(integrate(f, -2.0, 3.0, q) == doctest::Approx(exact).epsilon(1e-14));
}

TEST_CASE("gauss rule matches analytic sine integral") {
    QuadratureSpec q{};
    q.gauss_panels = 8;
    const double got = integrate([](double x) { return std::sin(x); }, 0.0, M_PI, q);
    CHECK(got == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("adaptive simpson converges on exp") {
    QuadratureSpec q{};
    q.method = QuadratureSpec::Method::AdaptiveSimpson;
    q.rel_tol = 1e-12;
    const double got = integrate([](double x) { return std::exp(x); }, 0.0, 1.0, q);
    CHECK(got == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-11));
}

TEST_CASE("degenerate interval integrates to zero") {
    QuadratureSpec q{};
    CHECK(integrate([](double x) { return x; }, 2.0, 2.0, q) == 0.0);
}

TEST_CASE("invalid tolerances are rejected") {
    QuadratureSpec q{};
    q.rel_tol = 0.0;
    CHECK_THROWS_AS(integrate([](double x) { return x; }, 0.0, 1.0, q), std::invalid_argument);
}
