#include "lqvac/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lqvac/error.hpp"

namespace lqvac {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw ArgumentError(std::string("PhysicalParams: ") + name + " must be finite and > 0, got " +
                            std::to_string(value));
    }
}

}  // namespace

PhysicalParams::PhysicalParams(double m, double omega0, double a0, double gamma, double c,
                               double low_energy_threshold)
    : m_(m), omega0_(omega0), a0_(a0), gamma_(gamma), c_(c), low_energy_threshold_(low_energy_threshold) {
    require_positive(m, "m");
    require_positive(omega0, "omega0");
    require_positive(a0, "a0");
    require_positive(gamma, "gamma");
    require_positive(c, "c");
    require_positive(low_energy_threshold, "low_energy_threshold");
    if (!(gamma < omega0)) {
        throw ArgumentError("PhysicalParams: gamma must be smaller than omega0 (narrow-line regime)");
    }
    if (!(epsilon() < 1.0)) {
        throw RegimeError("PhysicalParams: epsilon = omega0/(m c^2) = " + std::to_string(epsilon()) +
                          " is not below 1");
    }
}

PhysicalParams PhysicalParams::with_omega0(double omega0) const {
    return PhysicalParams(m_, omega0, a0_, gamma_, c_, low_energy_threshold_);
}

KinematicScales derived_scales(const PhysicalParams& p) noexcept {
    const double localization = p.c() / p.omega0();
    return KinematicScales{
        .compton_wavelength = 1.0 / (p.m() * p.c()),
        .photon_wavelength = 2.0 * std::numbers::pi * localization,
        .lifetime = 1.0 / p.omega0(),
        .localization_radius = localization,
        .epsilon = p.epsilon(),
    };
}

}  // namespace lqvac
