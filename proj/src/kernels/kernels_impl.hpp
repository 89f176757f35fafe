#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>

#include "lqvac/kernels.hpp"

namespace lqvac::kernels {

// Per-element formulas shared by the scalar kernels and the scalar entry
// points of the physics modules. Keep the operation order in sync with the
// vector variants; tests compare them bit for bit where no exp is involved.
inline double width_value(double rho, double t, const WidthCoeffs& k) noexcept {
    const double tau = t - 2.0 * rho / k.c;
    const double spread = tau / (k.m * k.a0);
    return std::sqrt(k.a0 * k.a0 + spread * spread);
}

inline double density_cm_value(double r2, double width) noexcept {
    constexpr double inv_pi_3_2 = 0.17958712212516656;  // pi^{-3/2}
    const double inv_w = 1.0 / width;
    return inv_pi_3_2 * (inv_w * inv_w * inv_w) * std::exp(-r2 * (inv_w * inv_w));
}

inline double density_rel_value(double rho, double sin2, double t, const RelCoeffs& k) noexcept {
    const double ct = k.c * t;
    if (rho > ct) {
        return 0.0;
    }
    const double prefactor = 3.0 * k.gamma / (8.0 * std::numbers::pi * k.c);
    return prefactor * sin2 / (rho * rho) * std::exp(k.gamma * (rho - ct) / k.c);
}

namespace scalar {
void exp_batch(std::span<const double> x, std::span<double> out);
void width_batch(std::span<const double> rho, std::span<const double> t, const WidthCoeffs& k,
                 std::span<double> out);
void density_cm_batch(std::span<const double> r2, std::span<const double> width, std::span<double> out);
void density_rel_batch(std::span<const double> rho, std::span<const double> sin2, std::span<const double> t,
                       const RelCoeffs& k, std::span<double> out);
void plate_remainder_terms(double b, std::size_t first, std::span<const double> nodes,
                           std::span<const double> weights, std::span<double> out);
}  // namespace scalar

#if defined(LQVAC_HAVE_AVX2_KERNELS)
namespace avx2 {
void exp_batch(std::span<const double> x, std::span<double> out);
void width_batch(std::span<const double> rho, std::span<const double> t, const WidthCoeffs& k,
                 std::span<double> out);
void density_cm_batch(std::span<const double> r2, std::span<const double> width, std::span<double> out);
void density_rel_batch(std::span<const double> rho, std::span<const double> sin2, std::span<const double> t,
                       const RelCoeffs& k, std::span<double> out);
void plate_remainder_terms(double b, std::size_t first, std::span<const double> nodes,
                           std::span<const double> weights, std::span<double> out);
}  // namespace avx2
#endif

}  // namespace lqvac::kernels
