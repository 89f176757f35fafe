#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "lqvac/model.hpp"
#include "lqvac/vec3.hpp"

namespace lqvac::wavefunction {

using Complex = std::complex<double>;
using ComplexVec3 = std::array<Complex, 3>;

struct WavefieldConfig {
    PhysicalParams params;
    double box_length = 1.0;       // normalization length L; cancels in every density
    double dipole_coupling = 1.0;  // e z_{+-}; only coefficient-level outputs depend on it
    Vec3 z_axis = kUnitZ;          // intra-atomic dipole axis

    /// Throws ArgumentError unless box_length > 0 and z_axis is a unit vector.
    void validate() const;
};

/// Particle and photon positions at time t. Everything else is derived:
/// the relative vector rho = r_ph - r_at and the centre of mass
/// R = r_at - rho omega0/(m c^2).
struct EvaluationPoint {
    Vec3 r_at;
    Vec3 r_ph;
    double t = 0.0;

    Vec3 relative() const noexcept { return r_ph - r_at; }
    double rho() const noexcept { return norm(relative()); }
    Vec3 center_of_mass(const PhysicalParams& params) const noexcept;
    /// sin^2 of the angle between z_axis and rho; 0 when rho = 0.
    double sin2_theta(const Vec3& z_axis) const noexcept;
    double theta_prime(const Vec3& z_axis) const noexcept;
};

enum class DensityKind { relative, center_of_mass, joint };

struct DensityField {
    DensityKind kind;
    std::vector<double> values;
};

/// Normalized Gaussian (sqrt(pi) a0)^{-3/2} exp(-r^2/(2 a0^2)).
double initial_packet(const Vec3& r, double a0);

/// L^{-3/2} pol exp(i (k.r_ph - omega t)), omega = c|k|. pol must be a unit
/// vector orthogonal to k.
ComplexVec3 photon_mode(const Vec3& r_ph, double t, const Vec3& k, const Vec3& pol, double box_length,
                        double c = 1.0);

/// Unit vector in the (k, z) plane orthogonal to k:
/// [k^2 z - k (k.z)] / [k sqrt(k^2 - (k.z)^2)]. Throws DegeneracyError when k || z.
Vec3 polarization_vector(const Vec3& k, const Vec3& z_axis);

/// Long-time expansion coefficient C_{q,k} on the photon shell omega = c|k|.
Complex coefficient(const Vec3& q, const Vec3& k, const WavefieldConfig& cfg);

/// Same expression with the photon frequency supplied explicitly (off shell),
/// for line-shape studies at fixed q and k geometry.
Complex coefficient_at(const Vec3& q, const Vec3& k, double omega, const WavefieldConfig& cfg);

/// Centre-of-mass width a(rho, t) = sqrt(a0^2 + (t - 2 rho/c)^2 / (m^2 a0^2)).
double width(double rho, double t, const PhysicalParams& params);

/// Relative-motion density 3 gamma sin^2(theta') / (8 pi c rho^2) on the
/// light cone interior rho <= c t, times exp(gamma (rho - c t)/c).
/// Throws SingularityError at rho = 0.
double density_rel(double rho, double theta_prime, double t, const PhysicalParams& params);

/// Centre-of-mass density [sqrt(pi) a(rho,t)]^{-3} exp(-R^2 / a(rho,t)^2).
double density_cm(const Vec3& R, double rho, double t, const PhysicalParams& params);

/// Entangled amplitude (component along the transverse unit vector e').
/// Its modulus squared equals density_rel * density_cm; the phase is that of
/// the closed form: (a0 + i tau/(m a0))^{-3/2} exp(-R^2 / (2 (a0^2 + i tau/m)))
/// with tau = t - 2 rho/c. Exactly 0 outside the light cone.
Complex amplitude(const EvaluationPoint& point, const WavefieldConfig& cfg);

/// Evaluates one density over a set of points using the vectorized kernels.
/// Per-point results do not depend on the thread count.
DensityField evaluate_density(DensityKind kind, std::span<const EvaluationPoint> points, const WavefieldConfig& cfg);

}  // namespace lqvac::wavefunction
