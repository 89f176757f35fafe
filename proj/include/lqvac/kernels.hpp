#pragma once

// Data-parallel inner loops shared by the physics modules.
//
// Every kernel has a scalar reference implementation and, on x86-64, an
// AVX2/FMA variant. The variant is chosen once at startup from the CPU's
// capabilities (override with LQVAC_SIMD=scalar|avx2|auto or set_backend()).
// Kernels built only from +, -, *, / and sqrt are bitwise identical across
// backends; kernels that evaluate exp agree to a few ulp.

#include <cstddef>
#include <span>
#include <string_view>

namespace lqvac::kernels {

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend b) noexcept;

/// True when the AVX2 variants were compiled in and the CPU supports AVX2+FMA.
bool avx2_available() noexcept;

Backend active_backend() noexcept;

/// Selects the backend for subsequent kernel calls. Throws ArgumentError if
/// the requested backend is not available on this machine.
void set_backend(Backend b);

/// out[i] = exp(x[i])
void exp_batch(std::span<const double> x, std::span<double> out);

struct WidthCoeffs {
    double a0;
    double m;
    double c;
};

/// out[i] = sqrt(a0^2 + (t[i] - 2 rho[i]/c)^2 / (m^2 a0^2))
void width_batch(std::span<const double> rho, std::span<const double> t, const WidthCoeffs& k,
                 std::span<double> out);

/// out[i] = pi^{-3/2} width[i]^{-3} exp(-r2[i] / width[i]^2)
void density_cm_batch(std::span<const double> r2, std::span<const double> width, std::span<double> out);

struct RelCoeffs {
    double gamma;
    double c;
};

/// out[i] = 3 gamma sin2[i] / (8 pi c rho[i]^2) * exp(gamma (rho[i] - c t[i]) / c)
/// inside the light cone (rho[i] <= c t[i]) and 0 outside. rho[i] > 0.
void density_rel_batch(std::span<const double> rho, std::span<const double> sin2, std::span<const double> t,
                       const RelCoeffs& k, std::span<double> out);

/// Trapezoid remainders of the plate mode function g(x) = e^{-x}(x^2 + 2x + 2)
/// sampled at x = b n:
///
///   out[i] = 1/2 * sum_j weights[j] s_j (1 - s_j) g''(b (first + i + s_j))
///
/// with g''(x) = e^{-x}(x^2 - 2x) and (nodes, weights) a quadrature rule on [0, 1].
/// Multiplying by b^2 gives (G(n) + G(n+1))/2 - integral_n^{n+1} G for G(n) = g(b n).
void plate_remainder_terms(double b, std::size_t first, std::span<const double> nodes,
                           std::span<const double> weights, std::span<double> out);

}  // namespace lqvac::kernels
