#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lqvac/model.hpp"

namespace lqvac::oscillator {

/// Uniform interior grid of a Dirichlet box [-half_width, +half_width]:
/// x_i = half_width * (2(i+1) - (N+1)) / (N+1), i = 0..N-1. For odd N the
/// middle node is exactly x = 0.
struct GridSpec {
    std::size_t n_points = 2000;
    double half_width = 8.0;

    double spacing() const noexcept { return 2.0 * half_width / static_cast<double>(n_points + 1); }
    double x(std::size_t i) const noexcept;

    /// Default grid for an oscillator: 8 oscillator lengths 1/sqrt(m omega0).
    static GridSpec for_params(const PhysicalParams& params, std::size_t n_points = 2000);
};

inline constexpr std::size_t kMinGridPoints = 16;

/// Symmetric tridiagonal finite-difference Hamiltonian.
struct TridiagonalHamiltonian {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;  // size n-1
    int mass_sign = 1;
    GridSpec grid;

    std::size_t dimension() const noexcept { return diagonal.size(); }

    /// Row-major dense copy (tests, small grids).
    std::vector<double> dense() const;
};

struct SpectrumResult {
    /// Ordered by increasing |E|: ascending for mass_sign = +1, descending
    /// for mass_sign = -1.
    std::vector<double> eigenvalues;
    /// eigenvectors[n][i] is state n at grid node i, with h * sum v^2 = 1 and
    /// the first node exceeding 1e-3 of the peak magnitude made positive.
    std::vector<std::vector<double>> eigenvectors;
    GridSpec grid;
    int mass_sign = 1;
};

/// omega0 (n + 1/2) for n = 0..n_max.
std::vector<double> exact_spectrum(double omega0, std::int64_t n_max);

/// Second-order central-difference matrix of
/// mass_sign * (p^2/2m + m omega0^2 x^2 / 2) on a one-dimensional grid.
TridiagonalHamiltonian discretize_hamiltonian(const PhysicalParams& params, const GridSpec& grid, int mass_sign);

/// The n_states eigenpairs of smallest |E|.
SpectrumResult solve_spectrum(const TridiagonalHamiltonian& h, std::size_t n_states);

/// Discrete inner product h * sum a_i b_i.
double overlap(const std::vector<double>& a, const std::vector<double>& b, const GridSpec& grid);

}  // namespace lqvac::oscillator
