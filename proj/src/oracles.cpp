#include "lqvac/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "kernels/kernels_impl.hpp"
#include "lqvac/error.hpp"
#include "lqvac/quadrature.hpp"

namespace lqvac::oracles {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

// exp(-45) ~ 3e-20: well below 1e-12 of any envelope the routines integrate.
constexpr double kEnvelopeExponent = 45.0;

// Internal target is tighter than the contract so that the (usually
// pessimistic) Kronrod estimate is not the only margin.
constexpr double kTargetFraction = 0.1;

template <typename T>
void require_converged(const quad::Estimate<T>& est, double rel_tol, const char* what) {
    const double scale = std::abs(est.value);
    if (!std::isfinite(scale) || est.error > rel_tol * scale) {
        throw ConvergenceError(std::string(what) + ": tolerance " + std::to_string(rel_tol) + " not reached",
                               scale > 0.0 ? est.error / scale : est.error);
    }
}

double gaussian_window(Complex w, const QuadratureSpec& spec) {
    if (spec.truncation_radius > 0.0) {
        return spec.truncation_radius;
    }
    return std::sqrt(2.0 * kEnvelopeExponent / w.real());
}

std::size_t chirp_panels(Complex w, double half_window) {
    // Local phase rate |Im w| q; one panel per ~pi/2 of accumulated phase.
    const double phase = 0.5 * std::abs(w.imag()) * half_window * half_window;
    return 8 + static_cast<std::size_t>(std::ceil(phase / (0.5 * kPi)));
}

void require_convergent(Complex w) {
    if (!(w.real() > 0.0)) {
        throw DivergenceError("complex_gaussian_integral: Re(w) must be > 0 (integral diverges)");
    }
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(rel_tolerance > 0.0 && rel_tolerance <= 1e-2)) {
        throw ArgumentError("QuadratureSpec: rel_tolerance must lie in (0, 1e-2]");
    }
    if (max_subdivisions == 0) {
        throw ArgumentError("QuadratureSpec: max_subdivisions must be positive");
    }
    if (truncation_radius < 0.0) {
        throw ArgumentError("QuadratureSpec: truncation_radius must be >= 0");
    }
}

Complex complex_gaussian_closed_form(Complex w, const Vec3& R) {
    const Complex root = std::sqrt(2.0 * kPi / w);
    return root * root * root * std::exp(-norm2(R) / (2.0 * w));
}

Complex complex_gaussian_integral(Complex w, const Vec3& R, const QuadratureSpec& spec) {
    spec.validate();
    require_convergent(w);
    const double r = norm(R);
    const double target = kTargetFraction * spec.rel_tolerance;

    if (r < 1e-3) {
        const double window = gaussian_window(w, spec);
        auto radial = [&](double q) -> Complex {
            const double x = q * r;
            const double j0 = std::abs(x) < 1e-4 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
            return q * q * j0 * std::exp(-0.5 * w * q * q);
        };
        const auto est = quad::integrate(radial, 0.0, window, target, 0.0, spec.max_subdivisions,
                                         chirp_panels(w, window));
        require_converged(est, spec.rel_tolerance, "complex_gaussian_integral");
        return 4.0 * kPi * est.value;
    }

    // Saddle point of -w q^2/2 + i q R sits at q* = i R / w. Integrate along
    // Im q = Im q*, where the modulus is a real Gaussian centred on Re q*.
    const Complex saddle = kI * r / w;
    const double shift = saddle.imag();
    const double center = saddle.real();
    const double window = gaussian_window(w, spec);
    auto line = [&](double x) -> Complex {
        const Complex q(x, shift);
        return q * std::exp(-0.5 * w * q * q + kI * q * r);
    };
    const auto est = quad::integrate(line, center - window, center + window, target, 0.0, spec.max_subdivisions,
                                     chirp_panels(w, window));
    require_converged(est, spec.rel_tolerance, "complex_gaussian_integral");
    return (2.0 * kPi / (kI * r)) * est.value;
}

Complex complex_gaussian_product(Complex w, const Vec3& R, const QuadratureSpec& spec) {
    spec.validate();
    require_convergent(w);
    const double window = gaussian_window(w, spec);
    const double target = kTargetFraction * spec.rel_tolerance;
    Complex product(1.0, 0.0);
    for (double component : {R.x, R.y, R.z}) {
        auto axis = [&](double q) -> Complex { return std::exp(-0.5 * w * q * q + kI * q * component); };
        const std::size_t panels = chirp_panels(w, window) + static_cast<std::size_t>(std::ceil(window * std::abs(component) / kPi));
        const auto est = quad::integrate(axis, -window, window, target, 0.0, spec.max_subdivisions, panels);
        require_converged(est, spec.rel_tolerance, "complex_gaussian_product");
        product *= est.value;
    }
    return product;
}

Complex photon_lineshape_pole(double x, double omega_res, double gamma, double c) {
    if (x >= 0.0) {
        return Complex(0.0, 0.0);
    }
    const double k_res = omega_res / c;
    const Complex k_pole = Complex(omega_res, -0.5 * gamma) / c;
    return (-2.0 * kPi * kI / c) * std::sqrt(k_res) * std::exp(kI * k_pole * x);
}

Complex photon_lineshape_integral(double x, double omega_res, double gamma, const QuadratureSpec& spec, double c) {
    spec.validate();
    if (!(gamma > 0.0) || !(omega_res > 0.0) || !(c > 0.0)) {
        throw ArgumentError("photon_lineshape_integral: gamma, omega_res and c must be > 0");
    }
    if (gamma / omega_res > 1e-2) {
        throw ArgumentError("photon_lineshape_integral: requires gamma/omega_res <= 1e-2");
    }
    if (x == 0.0) {
        throw DivergenceError("photon_lineshape_integral: x = 0 (logarithmically divergent)");
    }

    const double k_res = omega_res / c;
    const double sqrt_k = std::sqrt(k_res);
    const Complex offset(-omega_res, 0.5 * gamma);
    const double target = kTargetFraction * spec.rel_tolerance;
    const double ax = std::abs(x);

    // Finite part: the resonance and the k = 0 endpoint.
    const double k_split = 2.0 * k_res;
    auto real_axis = [&](double k) -> Complex { return sqrt_k * std::exp(kI * (k * x)) / (c * k + offset); };
    const std::size_t panels = 16 + static_cast<std::size_t>(std::ceil(k_split * ax / kPi));
    const auto finite = quad::integrate(real_axis, 0.0, k_split, target, 0.0, spec.max_subdivisions + panels, panels);

    // Tail: k = k_split + i sigma s with sigma = sign(x); exp(i k x) decays as
    // exp(-s |x|). The pole at Re k = k_res < k_split is not enclosed.
    const double sigma = x > 0.0 ? 1.0 : -1.0;
    const Complex phase = std::exp(kI * (k_split * x));
    auto ray = [&](double s) -> Complex {
        const Complex k(k_split, sigma * s);
        return kI * sigma * sqrt_k * phase * std::exp(-s * ax) / (c * k + offset);
    };
    const double s_max = spec.truncation_radius > 0.0 ? spec.truncation_radius : kEnvelopeExponent / ax;
    const auto tail = quad::integrate(ray, 0.0, s_max, target, 0.0, spec.max_subdivisions, 8);

    quad::Estimate<Complex> total;
    total.value = finite.value + tail.value;
    total.error = finite.error + tail.error;
    require_converged(total, spec.rel_tolerance, "photon_lineshape_integral");
    return total.value;
}

double normalization_rel(double t, double gamma, double c, const QuadratureSpec& spec) {
    spec.validate();
    if (!(t >= 0.0)) {
        throw ArgumentError("normalization_rel: t must be >= 0");
    }
    if (!(gamma > 0.0) || !(c > 0.0)) {
        throw ArgumentError("normalization_rel: gamma and c must be > 0");
    }
    if (t == 0.0) {
        return 0.0;
    }
    const kernels::RelCoeffs coeffs{gamma, c};
    const double target = kTargetFraction * spec.rel_tolerance;

    // Volume element rho^2 sin(theta) d rho d theta d phi; nodes never touch rho = 0.
    auto shell = [&](double rho) {
        auto polar = [&](double theta) {
            const double s = std::sin(theta);
            auto azimuth = [&](double) { return kernels::density_rel_value(rho, s * s, t, coeffs); };
            const auto ring = quad::integrate(azimuth, 0.0, 2.0 * kPi, target, 0.0, spec.max_subdivisions);
            return ring.value * s;
        };
        const auto sphere = quad::integrate(polar, 0.0, kPi, target, 0.0, spec.max_subdivisions);
        require_converged(sphere, spec.rel_tolerance, "normalization_rel (angular)");
        return rho * rho * sphere.value;
    };
    const auto est = quad::integrate(shell, 0.0, c * t, target, 0.0, spec.max_subdivisions);
    require_converged(est, spec.rel_tolerance, "normalization_rel");
    return est.value;
}

}  // namespace lqvac::oracles
