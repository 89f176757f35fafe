#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "lqvac/error.hpp"
#include "lqvac/quadrature.hpp"
#include "lqvac/vacuum.hpp"

namespace vac = lqvac::vacuum;

namespace {

constexpr double kPi = std::numbers::pi;

// Closed form of the regulated sum-minus-integral. With q = e^{-b} the sums
// over n of q^n, n q^n and n^2 q^n are geometric, so
//   E = Lambda^3/(2 pi c^2) [1 + 2 S0 + 2 b S1 + b^2 S2 - 6/b].
long double casimir_energy_closed_form(double d, double cutoff, double c) {
    const long double L = cutoff;
    const long double b = static_cast<long double>(c) * std::numbers::pi_v<long double> / (d * L);
    const long double q = std::exp(-b);
    const long double one_minus_q = -std::expm1(-b);
    const long double s0 = q / one_minus_q;
    const long double s1 = q / (one_minus_q * one_minus_q);
    const long double s2 = q * (1.0L + q) / (one_minus_q * one_minus_q * one_minus_q);
    const long double bracket = 1.0L + 2.0L * s0 + 2.0L * b * s1 + b * b * s2 - 6.0L / b;
    return L * L * L / (2.0L * std::numbers::pi_v<long double> * c * c) * bracket;
}

}  // namespace

TEST_CASE("mode sum energy") {
    const std::vector<vac::Mode> one{{1.0, 0}};
    CHECK(vac::mode_sum_energy(one) == 0.5);
    CHECK(vac::mode_sum_energy({}) == 0.0);
    const std::vector<vac::Mode> two{{1.0, 2}, {3.0, 0}};
    CHECK(vac::mode_sum_energy(two) == 4.0);
    const std::vector<vac::Mode> bad{{-1.0, 0}};
    CHECK_THROWS_AS(vac::mode_sum_energy(bad), lqvac::ArgumentError);
}

TEST_CASE("zero-point energy density") {
    CHECK(vac::zpe_energy_density(1.0) == doctest::Approx(0.01266515).epsilon(1e-7));
    CHECK(vac::zpe_energy_density(1.0) == doctest::Approx(1.0 / (8.0 * kPi * kPi)).epsilon(1e-15));
    CHECK(vac::zpe_energy_density(0.0) == 0.0);
    CHECK(vac::zpe_energy_density(2.0) / vac::zpe_energy_density(1.0) == doctest::Approx(16.0).epsilon(1e-15));
    for (double c : {1.0, 2.5}) {
        for (double wc : {0.5, 1.0, 10.0}) {
            const auto num = lqvac::quad::integrate([&](double w) { return vac::zpe_spectral_density(w, c); }, 0.0, wc,
                                                    1e-13);
            CHECK(std::abs(num.value - vac::zpe_energy_density(wc, c)) <= 1e-10 * vac::zpe_energy_density(wc, c));
        }
    }
    CHECK_THROWS_AS(vac::zpe_energy_density(-1.0), lqvac::ArgumentError);

    const lqvac::PhysicalParams p(1.0, 0.01, 1.0, 1e-4);
    CHECK(vac::localized_vacuum_energy(p) == doctest::Approx(0.01 / (6.0 * kPi)).epsilon(1e-14));
}

TEST_CASE("Casimir reference") {
    CHECK(vac::casimir_reference(1.0) == doctest::Approx(-0.04112335).epsilon(1e-7));
    CHECK(vac::casimir_reference(2.0) == doctest::Approx(-0.00257021).epsilon(1e-6));
    CHECK(vac::casimir_reference(1e30) == doctest::Approx(0.0));
    CHECK_THROWS_AS(vac::casimir_reference(0.0), lqvac::ArgumentError);
}

TEST_CASE("regularized plate energy against the geometric-series closed form") {
    for (auto [d, cutoff, c] : {std::tuple{1.0, 20.0, 1.0}, std::tuple{1.0, 100.0, 1.0}, std::tuple{0.5, 60.0, 1.0},
                                std::tuple{2.0, 30.0, 3.0}}) {
        const double e = vac::casimir_energy({d, cutoff, 1e-9, c});
        const double ref = static_cast<double>(casimir_energy_closed_form(d, cutoff, c));
        INFO("d = " << d << ", cutoff = " << cutoff << ", c = " << c);
        CHECK(std::abs(e - ref) <= 1e-8 * std::abs(ref));
    }
}

TEST_CASE("Casimir force") {
    const double reference = vac::casimir_reference(1.0);
    std::vector<double> forces;
    for (double cutoff : {100.0, 300.0, 1000.0}) {
        const auto r = vac::casimir_force({1.0, cutoff});
        CHECK(std::abs(r.force - reference) < 1e-3 * std::abs(reference));
        CHECK(r.reference == reference);
        CHECK(r.truncation_bound < 1e-6);
        CHECK(r.rule_discrepancy < 1e-9);
        CHECK(r.panels > 0);
        forces.push_back(r.force);
    }
    const auto [lo, hi] = std::minmax_element(forces.begin(), forces.end());
    CHECK((*hi - *lo) / std::abs(reference) < 1e-3);

    SUBCASE("1/d^4 scaling") {
        const double f1 = vac::casimir_force({1.0, 100.0}).force;
        const double f2 = vac::casimir_force({2.0, 50.0}).force;
        CHECK(f2 * 16.0 / f1 == doctest::Approx(1.0).epsilon(2e-3));
        CHECK(vac::casimir_force({2.0, 100.0}).force * 16.0 / f1 == doctest::Approx(1.0).epsilon(2e-3));
    }
    SUBCASE("force is the derivative of the closed-form energy") {
        const double d = 1.0;
        const double h = 1e-4;
        const long double ep = casimir_energy_closed_form(d + h, 100.0, 1.0);
        const long double em = casimir_energy_closed_form(d - h, 100.0, 1.0);
        const double f = static_cast<double>(-(ep - em) / (2.0L * h));
        CHECK(vac::casimir_force({d, 100.0}).force == doctest::Approx(f).epsilon(1e-6));
    }
    SUBCASE("speed of light") {
        const double f = vac::casimir_force({1.0, 200.0, 1e-9, 2.0}).force;
        CHECK(std::abs(f - vac::casimir_reference(1.0, 2.0)) < 1e-3 * std::abs(vac::casimir_reference(1.0, 2.0)));
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(vac::casimir_force({1.0, 5.0}), lqvac::ArgumentError);
        CHECK_THROWS_AS(vac::casimir_force({0.0, 100.0}), lqvac::ArgumentError);
        CHECK_THROWS_AS(vac::casimir_force({1.0, 100.0, 0.0}), lqvac::ArgumentError);
        CHECK_THROWS_AS(vac::casimir_force({1.0, 100.0, 1e-18}), lqvac::NumericalError);
    }
}
