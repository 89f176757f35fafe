#include "lqvac/vacuum.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "lqvac/error.hpp"
#include "lqvac/kernels.hpp"
#include "lqvac/parallel.hpp"
#include "lqvac/quadrature.hpp"

namespace lqvac::vacuum {

namespace {

constexpr double kPi = std::numbers::pi;

// g''(x) e^{x} grows polynomially, so panels past x = 60 contribute below
// 1e-20 of the leading panels.
constexpr double kTruncationX = 60.0;
constexpr double kStepFraction = 1e-4;

// Neumaier-compensated sum, in index order.
double compensated_sum(std::span<const double> terms) {
    double sum = 0.0;
    double carry = 0.0;
    for (double v : terms) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }
    return sum + carry;
}

struct PlateSum {
    double energy;
    std::size_t panels;
    double first_omitted;
};

PlateSum plate_energy(double d, double cutoff, double c, const quad::GaussLegendreRule& rule) {
    const double b = c * kPi / (d * cutoff);
    const double scale = cutoff * cutoff * cutoff / (2.0 * kPi * c * c);
    const auto panels = static_cast<std::size_t>(std::ceil(kTruncationX / b));

    std::vector<double> terms(panels);
    parallel_for(panels, [&](std::size_t begin, std::size_t end) {
        kernels::plate_remainder_terms(b, begin, rule.nodes, rule.weights,
                                       std::span<double>(terms.data() + begin, end - begin));
    });
    double omitted = 0.0;
    kernels::plate_remainder_terms(b, panels, rule.nodes, rule.weights, std::span<double>(&omitted, 1));

    const double factor = scale * b * b;
    return {factor * compensated_sum(terms), panels, factor * omitted};
}

const quad::GaussLegendreRule& primary_rule() {
    static const quad::GaussLegendreRule rule = quad::gauss_legendre_unit(8);
    return rule;
}

const quad::GaussLegendreRule& check_rule() {
    static const quad::GaussLegendreRule rule = quad::gauss_legendre_unit(12);
    return rule;
}

}  // namespace

double mode_sum_energy(std::span<const Mode> modes) {
    double total = 0.0;
    for (const Mode& mode : modes) {
        if (!(mode.omega > 0.0)) {
            throw ArgumentError("mode_sum_energy: mode frequency must be > 0");
        }
        total += mode.omega * (static_cast<double>(mode.occupation) + 0.5);
    }
    return total;
}

double zpe_spectral_density(double omega, double c) {
    if (!(c > 0.0)) {
        throw ArgumentError("zpe_spectral_density: c must be > 0");
    }
    return omega * omega * omega / (2.0 * kPi * kPi * c * c * c);
}

double zpe_energy_density(double omega_cut, double c) {
    if (!(omega_cut >= 0.0)) {
        throw ArgumentError("zpe_energy_density: cutoff must be >= 0");
    }
    if (!(c > 0.0)) {
        throw ArgumentError("zpe_energy_density: c must be > 0");
    }
    const double w2 = omega_cut * omega_cut;
    return w2 * w2 / (8.0 * kPi * kPi * c * c * c);
}

double localized_vacuum_energy(const PhysicalParams& params) {
    const double radius = params.c() / params.omega0();
    return zpe_energy_density(params.omega0(), params.c()) * (4.0 / 3.0) * kPi * radius * radius * radius;
}

void CasimirConfig::validate() const {
    if (!(separation > 0.0) || !std::isfinite(separation)) {
        throw ArgumentError("CasimirConfig: separation must be > 0");
    }
    if (!(cutoff > 0.0) || !std::isfinite(cutoff)) {
        throw ArgumentError("CasimirConfig: cutoff must be > 0");
    }
    if (!(c > 0.0)) {
        throw ArgumentError("CasimirConfig: c must be > 0");
    }
    if (!(quad_tolerance > 0.0)) {
        throw ArgumentError("CasimirConfig: quad_tolerance must be > 0");
    }
    if (!(cutoff * separation / c >= kMinCutoffTimesSeparation)) {
        throw ArgumentError("CasimirConfig: cutoff * separation / c = " + std::to_string(cutoff * separation / c) +
                            " is below " + std::to_string(kMinCutoffTimesSeparation) +
                            "; the regulator would distort the force");
    }
}

double casimir_energy(const CasimirConfig& config) {
    config.validate();
    return plate_energy(config.separation, config.cutoff, config.c, primary_rule()).energy;
}

CasimirResult casimir_force(const CasimirConfig& config) {
    config.validate();
    const double d = config.separation;
    const double h = kStepFraction * d;

    const PlateSum center = plate_energy(d, config.cutoff, config.c, primary_rule());
    const PlateSum upper = plate_energy(d + h, config.cutoff, config.c, primary_rule());
    const PlateSum lower = plate_energy(d - h, config.cutoff, config.c, primary_rule());
    const PlateSum check = plate_energy(d, config.cutoff, config.c, check_rule());

    const double discrepancy = std::abs(center.energy - check.energy) / std::abs(center.energy);
    if (!(discrepancy <= config.quad_tolerance)) {
        throw NumericalError("casimir_force: panel rules disagree by " + std::to_string(discrepancy) +
                             " (tolerance " + std::to_string(config.quad_tolerance) + ")");
    }

    CasimirResult out;
    out.force = -(upper.energy - lower.energy) / (2.0 * h);
    out.energy = center.energy;
    out.reference = casimir_reference(d, config.c);
    out.panels = center.panels;
    out.truncation_bound = std::abs(center.first_omitted) / std::abs(center.energy);
    out.rule_discrepancy = discrepancy;
    return out;
}

double casimir_reference(double separation, double c) {
    if (!(separation > 0.0)) {
        throw ArgumentError("casimir_reference: separation must be > 0");
    }
    const double d2 = separation * separation;
    return -kPi * kPi * c / (240.0 * d2 * d2);
}

}  // namespace lqvac::vacuum
