#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mwi/simd/sincos.hpp"

using namespace mwi::simd;

namespace {

struct BackendGuard {
    Backend saved = active_backend();
    ~BackendGuard() { set_backend(saved); }
};

std::vector<double> test_args() {
    std::vector<double> x;
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> small(-20.0, 20.0);
    std::uniform_real_distribution<double> medium(-1e4, 1e4);
    std::uniform_real_distribution<double> large(-1e8, 1e8);
    for (int i = 0; i < 4000; ++i) x.push_back(small(rng));
    for (int i = 0; i < 4000; ++i) x.push_back(medium(rng));
    for (int i = 0; i < 4000; ++i) x.push_back(large(rng));
    // Quadrant boundaries and signed zeros.
    for (int n = -8; n <= 8; ++n) x.push_back(n * M_PI_2);
    x.push_back(0.0);
    x.push_back(-0.0);
    // Out-of-range values exercise the elementwise fallback.
    x.push_back(3e8);
    x.push_back(-7.7e9);
    // Non-multiple-of-4 length exercises the scalar tail.
    x.push_back(1.25);
    return x;
}

}  // namespace

TEST_CASE("scalar backend reproduces the standard library exactly") {
    const std::vector<double> x = test_args();
    std::vector<double> s(x.size()), c(x.size());
    sincos_scalar(x.data(), s.data(), c.data(), x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(s[i] == std::sin(x[i]));
        CHECK(c[i] == std::cos(x[i]));
    }
}

TEST_CASE("backend selection") {
    BackendGuard guard;
    CHECK(backend_available(Backend::Scalar));
    set_backend(Backend::Scalar);
    CHECK(active_backend() == Backend::Scalar);
    CHECK(to_string(Backend::Scalar) == "scalar");
    CHECK(to_string(Backend::Avx2) == "avx2");
    if (!backend_available(Backend::Avx2))
        CHECK_THROWS_AS(set_backend(Backend::Avx2), std::invalid_argument);
}

TEST_CASE("vector backend agrees with the scalar reference") {
    if (!backend_available(Backend::Avx2)) return;   // nothing to compare on this host
    BackendGuard guard;

    const std::vector<double> x = test_args();
    std::vector<double> s_ref(x.size()), c_ref(x.size());
    sincos_scalar(x.data(), s_ref.data(), c_ref.data(), x.size());

    set_backend(Backend::Avx2);
    std::vector<double> s(x.size()), c(x.size());
    sincos(x.data(), s.data(), c.data(), x.size());

    for (std::size_t i = 0; i < x.size(); ++i) {
        // Single-stage Cody-Waite reduction: absolute error grows with |x|
        // but stays far below the equivalence tolerance over the valid range.
        CHECK(std::fabs(s[i] - s_ref[i]) <= 5e-13);
        CHECK(std::fabs(c[i] - c_ref[i]) <= 5e-13);
        CHECK(s[i] * s[i] + c[i] * c[i] == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("dispatch routes through the selected backend") {
    BackendGuard guard;
    set_backend(Backend::Scalar);
    const double x = 1.2345;
    double s = 0.0, c = 0.0;
    sincos(&x, &s, &c, 1);
    CHECK(s == std::sin(x));
    CHECK(c == std::cos(x));
}
