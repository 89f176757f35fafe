#include "lqvac/oscillator.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "lqvac/error.hpp"

namespace lqvac::oscillator {

double GridSpec::x(std::size_t i) const noexcept {
    const double numer = 2.0 * static_cast<double>(i + 1) - static_cast<double>(n_points + 1);
    return half_width * numer / static_cast<double>(n_points + 1);
}

GridSpec GridSpec::for_params(const PhysicalParams& params, std::size_t n_points) {
    return GridSpec{n_points, 8.0 / std::sqrt(params.m() * params.omega0())};
}

std::vector<double> TridiagonalHamiltonian::dense() const {
    const std::size_t n = dimension();
    std::vector<double> a(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        a[i * n + i] = diagonal[i];
        if (i + 1 < n) {
            a[i * n + i + 1] = off_diagonal[i];
            a[(i + 1) * n + i] = off_diagonal[i];
        }
    }
    return a;
}

std::vector<double> exact_spectrum(double omega0, std::int64_t n_max) {
    if (n_max < 0) {
        throw ArgumentError("exact_spectrum: n_max must be >= 0");
    }
    std::vector<double> energies;
    energies.reserve(static_cast<std::size_t>(n_max) + 1);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        energies.push_back(omega0 * (static_cast<double>(n) + 0.5));
    }
    return energies;
}

TridiagonalHamiltonian discretize_hamiltonian(const PhysicalParams& params, const GridSpec& grid, int mass_sign) {
    if (grid.n_points < kMinGridPoints) {
        throw ArgumentError("discretize_hamiltonian: grid needs at least " + std::to_string(kMinGridPoints) +
                            " points, got " + std::to_string(grid.n_points));
    }
    if (!(grid.half_width > 0.0)) {
        throw ArgumentError("discretize_hamiltonian: half_width must be > 0");
    }
    if (mass_sign != 1 && mass_sign != -1) {
        throw ArgumentError("discretize_hamiltonian: mass_sign must be +1 or -1");
    }
    const double h = grid.spacing();
    const double m = params.m();
    const double w0 = params.omega0();
    const double sign = static_cast<double>(mass_sign);
    const double kinetic_diag = 1.0 / (m * h * h);
    const double kinetic_off = -0.5 / (m * h * h);

    TridiagonalHamiltonian out;
    out.mass_sign = mass_sign;
    out.grid = grid;
    out.diagonal.resize(grid.n_points);
    out.off_diagonal.assign(grid.n_points - 1, sign * kinetic_off);
    for (std::size_t i = 0; i < grid.n_points; ++i) {
        const double x = grid.x(i);
        out.diagonal[i] = sign * (kinetic_diag + 0.5 * m * w0 * w0 * x * x);
    }
    return out;
}

namespace {

void fix_sign(std::vector<double>& v) {
    double peak = 0.0;
    for (double value : v) {
        peak = std::max(peak, std::abs(value));
    }
    for (double value : v) {
        if (std::abs(value) > 1e-3 * peak) {
            if (value < 0.0) {
                for (double& x : v) {
                    x = -x;
                }
            }
            return;
        }
    }
}

}  // namespace

SpectrumResult solve_spectrum(const TridiagonalHamiltonian& h, std::size_t n_states) {
    const std::size_t n = h.dimension();
    if (n_states == 0 || n_states > n) {
        throw ArgumentError("solve_spectrum: n_states must be in [1, " + std::to_string(n) + "]");
    }
    if (h.off_diagonal.size() + 1 != n) {
        throw ArgumentError("solve_spectrum: malformed tridiagonal matrix");
    }

    // Smallest |E| sits at the bottom of the spectrum for +m and at the top for -m.
    const lapack_int dim = static_cast<lapack_int>(n);
    const lapack_int count = static_cast<lapack_int>(n_states);
    const lapack_int il = h.mass_sign > 0 ? 1 : dim - count + 1;
    const lapack_int iu = h.mass_sign > 0 ? count : dim;

    std::vector<double> d = h.diagonal;
    std::vector<double> e = h.off_diagonal;
    e.push_back(0.0);
    std::vector<double> w(n);
    std::vector<double> z(n * n_states);
    std::vector<lapack_int> isuppz(2 * n_states);
    lapack_int found = 0;
    const lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', dim, d.data(), e.data(), 0.0, 0.0, il, iu,
                                           0.0, &found, w.data(), z.data(), dim, isuppz.data());
    if (info != 0 || found != count) {
        throw NumericalError("solve_spectrum: dstevr failed (info=" + std::to_string(info) +
                             ", found=" + std::to_string(found) + " of " + std::to_string(count) +
                             ", dimension=" + std::to_string(n) + ")");
    }

    SpectrumResult out;
    out.grid = h.grid;
    out.mass_sign = h.mass_sign;
    const double scale = 1.0 / std::sqrt(h.grid.spacing());
    for (lapack_int k = 0; k < count; ++k) {
        // dstevr returns ascending order; reverse for the negative-mass case.
        const lapack_int col = h.mass_sign > 0 ? k : count - 1 - k;
        out.eigenvalues.push_back(w[static_cast<std::size_t>(col)]);
        std::vector<double> v(z.begin() + static_cast<std::ptrdiff_t>(col) * dim,
                              z.begin() + static_cast<std::ptrdiff_t>(col + 1) * dim);
        for (double& x : v) {
            x *= scale;
        }
        fix_sign(v);
        out.eigenvectors.push_back(std::move(v));
    }
    return out;
}

double overlap(const std::vector<double>& a, const std::vector<double>& b, const GridSpec& grid) {
    if (a.size() != b.size()) {
        throw ArgumentError("overlap: vectors differ in length");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += a[i] * b[i];
    }
    return grid.spacing() * sum;
}

}  // namespace lqvac::oscillator
