#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "lqvac/model.hpp"

namespace lqvac::vacuum {

struct Mode {
    double omega;
    std::uint64_t occupation = 0;
};

/// sum omega (n + 1/2) over the modes (hbar = 1); 0 for an empty list.
double mode_sum_energy(std::span<const Mode> modes);

/// Free-space zero-point spectral density omega^3 / (2 pi^2 c^3).
double zpe_spectral_density(double omega, double c = 1.0);

/// Zero-point energy density up to omega_cut: omega_cut^4 / (8 pi^2 c^3).
double zpe_energy_density(double omega_cut, double c = 1.0);

/// Zero-point energy inside a sphere of the localization radius c/omega0,
/// using omega0 as the cutoff.
double localized_vacuum_energy(const PhysicalParams& params);

struct CasimirConfig {
    double separation;             // plate distance d
    double cutoff;                 // exponential regulator scale Lambda
    double quad_tolerance = 1e-9;  // agreement required between two panel rules
    double c = 1.0;

    /// Throws ArgumentError unless d > 0, Lambda > 0 and Lambda d / c >= 10.
    void validate() const;
};

inline constexpr double kMinCutoffTimesSeparation = 10.0;

struct CasimirResult {
    double force;              // per unit area, negative = attractive
    double energy;             // regularized energy per unit area at d
    double reference;          // -pi^2 c / (240 d^4)
    std::size_t panels;        // mode-sum truncation (number of n panels)
    double truncation_bound;   // first omitted panel relative to |energy|
    double rule_discrepancy;   // relative energy difference between the two panel rules
};

/// Regularized vacuum energy per unit area between perfect plates:
///
///   E(d) = sum'_n F(n) - int_0^inf F(n) dn,
///   F(n) = Lambda^3 / (2 pi c^2) g(c n pi / (d Lambda)),  g(x) = e^{-x}(x^2 + 2x + 2),
///
/// where F is the transverse-integrated zero-point energy of the n-th plate
/// mode with two polarizations (one for n = 0, hence the primed sum) and
/// regulator e^{-omega/Lambda}. The sum and the integral are paired panel by
/// panel, (F(n) + F(n+1))/2 - int_n^{n+1} F, each panel evaluated through
/// its exact remainder kernel so no cancellation between huge partial sums occurs.
double casimir_energy(const CasimirConfig& config);

/// Force per unit area from a central difference of casimir_energy with
/// step 1e-4 d. Throws NumericalError if the two panel rules disagree by
/// more than quad_tolerance.
CasimirResult casimir_force(const CasimirConfig& config);

/// -pi^2 c / (240 d^4) (hbar = 1).
double casimir_reference(double separation, double c = 1.0);

}  // namespace lqvac::vacuum
