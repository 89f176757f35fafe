#include "lqvac/wavefunction.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "kernels/kernels_impl.hpp"
#include "lqvac/error.hpp"
#include "lqvac/kernels.hpp"
#include "lqvac/parallel.hpp"

namespace lqvac::wavefunction {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUnitTolerance = 1e-12;

kernels::WidthCoeffs width_coeffs(const PhysicalParams& p) { return {p.a0(), p.m(), p.c()}; }

kernels::RelCoeffs rel_coeffs(const PhysicalParams& p) { return {p.gamma(), p.c()}; }

void require_rho(double rho, const char* where) {
    if (rho == 0.0) {
        throw SingularityError(std::string(where) + ": rho = 0 (the relative density diverges as 1/rho^2)");
    }
    if (!(rho > 0.0)) {
        throw ArgumentError(std::string(where) + ": rho must be > 0");
    }
}

void require_time(double t, const char* where) {
    if (!(t >= 0.0)) {
        throw ArgumentError(std::string(where) + ": t must be >= 0");
    }
}

double sin2_between(const Vec3& a, const Vec3& unit_axis) {
    const double a2 = norm2(a);
    if (a2 == 0.0) {
        return 0.0;
    }
    return norm2(cross(a, unit_axis)) / a2;
}

}  // namespace

void WavefieldConfig::validate() const {
    if (!(box_length > 0.0)) {
        throw ArgumentError("WavefieldConfig: box_length must be > 0");
    }
    if (!(std::abs(norm(z_axis) - 1.0) <= kUnitTolerance)) {
        throw ArgumentError("WavefieldConfig: z_axis must be a unit vector");
    }
}

Vec3 EvaluationPoint::center_of_mass(const PhysicalParams& params) const noexcept {
    const double shift = params.omega0() / (params.m() * params.c() * params.c());
    return r_at - relative() * shift;
}

double EvaluationPoint::sin2_theta(const Vec3& z_axis) const noexcept { return sin2_between(relative(), z_axis); }

double EvaluationPoint::theta_prime(const Vec3& z_axis) const noexcept {
    const Vec3 rel = relative();
    return std::atan2(norm(cross(rel, z_axis)), dot(rel, z_axis));
}

double initial_packet(const Vec3& r, double a0) {
    if (!(a0 > 0.0)) {
        throw ArgumentError("initial_packet: a0 must be > 0");
    }
    return std::pow(std::sqrt(kPi) * a0, -1.5) * std::exp(-norm2(r) / (2.0 * a0 * a0));
}

ComplexVec3 photon_mode(const Vec3& r_ph, double t, const Vec3& k, const Vec3& pol, double box_length, double c) {
    if (!(box_length > 0.0)) {
        throw ArgumentError("photon_mode: box_length must be > 0");
    }
    const double k_mag = norm(k);
    if (std::abs(dot(pol, k)) > kUnitTolerance * std::max(1.0, k_mag)) {
        throw ArgumentError("photon_mode: polarization is not orthogonal to k");
    }
    const double phase = dot(k, r_ph) - c * k_mag * t;
    const Complex factor = std::pow(box_length, -1.5) * Complex(std::cos(phase), std::sin(phase));
    return {factor * pol.x, factor * pol.y, factor * pol.z};
}

Vec3 polarization_vector(const Vec3& k, const Vec3& z_axis) {
    const double k2 = norm2(k);
    const double kz = dot(k, z_axis);
    const double transverse2 = k2 - kz * kz;
    if (k2 == 0.0 || !(transverse2 > 1e-24 * k2)) {
        throw DegeneracyError("polarization_vector: k is parallel to the dipole axis");
    }
    return (z_axis * k2 - k * kz) / (std::sqrt(k2) * std::sqrt(transverse2));
}

Complex coefficient_at(const Vec3& q, const Vec3& k, double omega, const WavefieldConfig& cfg) {
    const double k_mag = norm(k);
    if (!(k_mag > 0.0)) {
        throw ArgumentError("coefficient: |k| must be > 0");
    }
    if (!(omega > 0.0)) {
        throw ArgumentError("coefficient: omega must be > 0");
    }
    const PhysicalParams& p = cfg.params;
    const double sin_theta = norm(cross(k, cfg.z_axis)) / k_mag;
    const double L = cfg.box_length;
    const double shape = std::pow(p.a0() / (L * L * std::sqrt(kPi)), 1.5);
    const double prefactor = cfg.dipole_coupling * p.omega0() * (4.0 * kPi * kPi) / std::sqrt(omega) * shape;
    const Complex denominator(-norm2(q) / (2.0 * p.m()) - norm2(q + k) / (2.0 * p.m()) + omega - p.omega0(),
                              0.5 * p.gamma());
    return Complex(0.0, -prefactor * sin_theta) / denominator;
}

Complex coefficient(const Vec3& q, const Vec3& k, const WavefieldConfig& cfg) {
    return coefficient_at(q, k, cfg.params.c() * norm(k), cfg);
}

double width(double rho, double t, const PhysicalParams& params) {
    if (!(rho >= 0.0)) {
        throw ArgumentError("width: rho must be >= 0");
    }
    require_time(t, "width");
    return kernels::width_value(rho, t, width_coeffs(params));
}

double density_rel(double rho, double theta_prime, double t, const PhysicalParams& params) {
    require_rho(rho, "density_rel");
    require_time(t, "density_rel");
    const double s = std::sin(theta_prime);
    return kernels::density_rel_value(rho, s * s, t, rel_coeffs(params));
}

double density_cm(const Vec3& R, double rho, double t, const PhysicalParams& params) {
    if (!(rho >= 0.0)) {
        throw ArgumentError("density_cm: rho must be >= 0");
    }
    require_time(t, "density_cm");
    return kernels::density_cm_value(norm2(R), kernels::width_value(rho, t, width_coeffs(params)));
}

Complex amplitude(const EvaluationPoint& point, const WavefieldConfig& cfg) {
    const PhysicalParams& p = cfg.params;
    const double rho = point.rho();
    require_rho(rho, "amplitude");
    require_time(point.t, "amplitude");
    const double c = p.c();
    if (rho > c * point.t) {
        return Complex(0.0, 0.0);
    }
    const double sin_theta = std::sqrt(point.sin2_theta(cfg.z_axis));
    const double a0 = p.a0();
    const double tau = point.t - 2.0 * rho / c;
    const double R2 = norm2(point.center_of_mass(p));

    // |N|^2 = 3 gamma / (8 pi c) * pi^{-3/2}, fixing |amplitude|^2 to the
    // product of the two normalized densities.
    const double norm_factor = std::sqrt(3.0 * p.gamma() / (8.0 * kPi * c)) * std::pow(kPi, -0.75);
    const double radial = norm_factor * sin_theta / rho * std::exp(p.gamma() * (rho - c * point.t) / (2.0 * c));
    const Complex spread = std::pow(Complex(a0, tau / (p.m() * a0)), -1.5);
    const Complex gaussian = std::exp(-R2 / (2.0 * Complex(a0 * a0, tau / p.m())));
    return radial * spread * gaussian;
}

DensityField evaluate_density(DensityKind kind, std::span<const EvaluationPoint> points, const WavefieldConfig& cfg) {
    cfg.validate();
    const PhysicalParams& p = cfg.params;
    const std::size_t n = points.size();
    std::vector<double> rho(n), t(n), sin2(n), r2(n);
    for (std::size_t i = 0; i < n; ++i) {
        const EvaluationPoint& pt = points[i];
        require_time(pt.t, "evaluate_density");
        rho[i] = pt.rho();
        t[i] = pt.t;
        sin2[i] = pt.sin2_theta(cfg.z_axis);
        r2[i] = norm2(pt.center_of_mass(p));
        if (kind != DensityKind::center_of_mass) {
            require_rho(rho[i], "evaluate_density");
        }
    }

    DensityField field{kind, std::vector<double>(n)};
    std::vector<double> scratch(n);
    const auto wc = width_coeffs(p);
    const auto rc = rel_coeffs(p);
    parallel_for(n, [&](std::size_t begin, std::size_t end) {
        const std::size_t len = end - begin;
        std::span<const double> rho_s(rho.data() + begin, len);
        std::span<const double> t_s(t.data() + begin, len);
        std::span<double> out(field.values.data() + begin, len);
        std::span<double> tmp(scratch.data() + begin, len);
        switch (kind) {
            case DensityKind::relative:
                kernels::density_rel_batch(rho_s, {sin2.data() + begin, len}, t_s, rc, out);
                break;
            case DensityKind::center_of_mass:
                kernels::width_batch(rho_s, t_s, wc, tmp);
                kernels::density_cm_batch({r2.data() + begin, len}, tmp, out);
                break;
            case DensityKind::joint: {
                std::vector<double> rel(len);
                kernels::density_rel_batch(rho_s, {sin2.data() + begin, len}, t_s, rc, rel);
                kernels::width_batch(rho_s, t_s, wc, tmp);
                kernels::density_cm_batch({r2.data() + begin, len}, tmp, out);
                for (std::size_t i = 0; i < len; ++i) {
                    out[i] = rel[i] * out[i];
                }
                break;
            }
        }
    });
    return field;
}

}  // namespace lqvac::wavefunction
