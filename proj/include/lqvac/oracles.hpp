#pragma once

#include <complex>
#include <cstddef>

#include "lqvac/vec3.hpp"

// Brute-force numerical checks of the analytic integration steps behind the
// entangled wavefunction: the complex-width Gaussian momentum integral, the
// resonant photon line-shape integral, and the normalization of the
// relative-motion density.
namespace lqvac::oracles {

using Complex = std::complex<double>;

struct QuadratureSpec {
    double rel_tolerance = 1e-8;
    std::size_t max_subdivisions = 4000;
    /// Half-length of the integration window; 0 picks one automatically so
    /// that the integrand envelope at the boundary is below 1e-12.
    double truncation_radius = 0.0;

    /// Throws ArgumentError unless rel_tolerance is in (0, 1e-2].
    void validate() const;
};

/// Numeric value of the integral over all q in R^3 of exp(-q^2 w / 2 + i q.R), Re(w) > 0.
///
/// Spherical symmetry reduces it to one dimension:
///   |R| small: 4 pi int_0^inf q^2 exp(-w q^2/2) sin(qR)/(qR) dq;
///   otherwise: (2 pi / (i R)) int_{-inf}^{inf} q exp(-w q^2/2 + i q R) dq,
/// evaluated along the horizontal line through the saddle point i R / w so
/// that the integrand never cancels below the size of the result.
/// Throws DivergenceError if Re(w) <= 0 and ConvergenceError if the
/// tolerance is not reached.
Complex complex_gaussian_integral(Complex w, const Vec3& R, const QuadratureSpec& spec = {});

/// (2 pi / w)^{3/2} exp(-R^2 / (2 w)), principal branch.
Complex complex_gaussian_closed_form(Complex w, const Vec3& R);

/// Same integral as a product of three one-dimensional numeric integrals on
/// the real axis (no symmetry reduction, no contour shift). Only reliable
/// when |exp(-R^2/(2w))| is not tiny; used to cross-check the radial route.
Complex complex_gaussian_product(Complex w, const Vec3& R, const QuadratureSpec& spec = {});

/// int_0^inf dk sqrt(k_res) exp(i k x) / (c k - omega_res + i gamma/2), with
/// the slowly varying sqrt(k) frozen at k_res = omega_res / c.
///
/// [0, K] is integrated on the real axis in half-period panels and the tail
/// [K, inf) along a vertical ray into the half plane where exp(i k x)
/// decays. Requires gamma > 0, gamma/omega_res <= 1e-2 and x != 0.
Complex photon_lineshape_integral(double x, double omega_res, double gamma, const QuadratureSpec& spec = {},
                                  double c = 1.0);

/// Single-pole value: Theta(-x) (-2 pi i / c) sqrt(k_res) exp(i k_p x),
/// k_p = (omega_res - i gamma/2)/c; its modulus decays as exp(gamma x / 2c).
Complex photon_lineshape_pole(double x, double omega_res, double gamma, double c = 1.0);

/// Volume integral of the relative-motion density over rho in (0, c t] and
/// the full solid angle, by nested adaptive quadrature. t = 0 gives 0.
double normalization_rel(double t, double gamma, double c, const QuadratureSpec& spec = {});

}  // namespace lqvac::oracles
