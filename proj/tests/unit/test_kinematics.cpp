#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "lqvac/error.hpp"
#include "lqvac/kinematics.hpp"

namespace kin = lqvac::kinematics;
using lqvac::PhysicalParams;
using lqvac::Vec3;

namespace {

// Quadratic-root oracle k = m c (1 - sqrt(1 - 2 eps)) in extended precision.
double root_oracle(double m, double c, double w0) {
    const long double mc = static_cast<long double>(m) * c;
    const long double eps = static_cast<long double>(w0) / (mc * c);
    return static_cast<double>(mc * (1.0L - std::sqrt(1.0L - 2.0L * eps)));
}

// Fibonacci sphere: deterministic, well spread directions.
std::vector<Vec3> sphere_sample(std::size_t n) {
    std::vector<Vec3> out;
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t i = 0; i < n; ++i) {
        const double z = 1.0 - 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
        const double r = std::sqrt(1.0 - z * z);
        const double phi = golden * static_cast<double>(i);
        out.push_back(lqvac::normalized(Vec3{r * std::cos(phi), r * std::sin(phi), z}));
    }
    return out;
}

}  // namespace

TEST_CASE("photon wavevector at epsilon = 0.01") {
    const PhysicalParams p(1.0, 0.01, 1.0, 1e-4);
    const auto t = kin::solve_photon_wavevector(p, lqvac::kUnitZ);
    const double oracle = root_oracle(1.0, 1.0, 0.01);
    CHECK(oracle == doctest::Approx(1.0 - std::sqrt(0.98)).epsilon(1e-12));
    CHECK(t.k.z == doctest::Approx(oracle).epsilon(1e-14));
    CHECK(t.k.z == doctest::Approx(0.01005051).epsilon(1e-6));
    CHECK(t.q.z == -t.k.z);
    CHECK(t.k.x == 0.0);
    CHECK(t.omega == doctest::Approx(oracle).epsilon(1e-14));
    CHECK(t.q_longitudinal == -t.k.z);
}

TEST_CASE("rest frame gives q = -k exactly") {
    const PhysicalParams p(1.7, 0.02, 1.0, 1e-4, 1.3);
    for (const Vec3& n : sphere_sample(20)) {
        const auto t = kin::solve_photon_wavevector(p, n);
        CHECK(t.q == -t.k);
        CHECK(kin::momentum_residual(t) == Vec3{});
    }
}

TEST_CASE("forbidden transition") {
    const PhysicalParams p(1.0, 0.6, 1.0, 1e-3);
    CHECK_THROWS_AS(kin::solve_photon_wavevector(p, lqvac::kUnitZ), lqvac::RegimeError);
    CHECK_THROWS_AS(kin::solve_photon_wavevector(PhysicalParams(1.0, 0.01, 1.0, 1e-4), Vec3{1.0, 1.0, 0.0}),
                    lqvac::ArgumentError);
}

TEST_CASE("recoil velocity of a negative-mass particle") {
    const Vec3 v = kin::recoil_velocity({0.0, 0.0, -0.01}, 1.0);
    CHECK(v == Vec3{0.0, 0.0, 0.01});
    CHECK(lqvac::dot(v, lqvac::kUnitZ) > 0.0);
    CHECK(kin::recoil_velocity({}, 1.0) == Vec3{});
    CHECK(kin::recoil_velocity({0.02, 0.0, 0.0}, 2.0) == Vec3{-0.01, 0.0, 0.0});
}

TEST_CASE("energy balance and same-direction recoil over the sphere") {
    for (const double c : {1.0, 2.5}) {
        const PhysicalParams p(1.0, 0.01 * c * c, 1.0, 1e-4 * c * c, c);
        for (const Vec3& n : sphere_sample(100)) {
            const auto t = kin::solve_photon_wavevector(p, n);
            CHECK(std::abs(kin::energy_residual(t, p)) < 1e-10 * t.omega);
            CHECK(t.omega == doctest::Approx(c * lqvac::norm(t.k)).epsilon(1e-15));
            CHECK(lqvac::dot(kin::recoil_velocity(t.q, p.m()), lqvac::normalized(t.k)) > 0.0);
        }
    }
}

TEST_CASE("photon frequency approaches omega0 linearly in epsilon") {
    std::vector<double> deviation;
    for (double eps : {1e-2, 1e-3, 1e-4}) {
        const PhysicalParams p(1.0, eps, 1.0, eps * 1e-3);
        const auto t = kin::solve_photon_wavevector(p, lqvac::kUnitX);
        deviation.push_back(p.c() * lqvac::norm(t.k) / p.omega0() - 1.0);
    }
    CHECK(deviation[0] / deviation[1] == doctest::Approx(10.0).epsilon(0.02));
    CHECK(deviation[1] / deviation[2] == doctest::Approx(10.0).epsilon(0.02));
}

TEST_CASE("lab-frame shift keeps momentum conservation") {
    const PhysicalParams p(1.0, 0.01, 1.0, 1e-4);
    const auto rest = kin::solve_photon_wavevector(p, lqvac::kUnitY);
    const auto lab = kin::shift_to_frame(rest, {0.5, 0.0, -0.25});
    CHECK(lqvac::norm(kin::momentum_residual(lab)) < 1e-16);
    CHECK(lab.k == rest.k);
}
