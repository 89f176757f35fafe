#include "lqvac/kinematics.hpp"

#include <cmath>
#include <string>

#include "lqvac/error.hpp"

namespace lqvac::kinematics {

TransitionKinematics solve_photon_wavevector(const PhysicalParams& params, const Vec3& direction) {
    const double len = norm(direction);
    if (!(std::abs(len - 1.0) <= 1e-12)) {
        throw ArgumentError("solve_photon_wavevector: direction must be a unit vector (|n| = " +
                            std::to_string(len) + ")");
    }
    const double c = params.c();
    const double disc = 1.0 - 2.0 * params.epsilon();
    if (disc < 0.0) {
        throw RegimeError("transition kinematically forbidden at this epsilon (" +
                          std::to_string(params.epsilon()) + "): 1 - 2 epsilon < 0");
    }
    // Smaller root of k^2/(2m) - c k + omega0 = 0, written without the
    // cancellation in m c (1 - sqrt(1 - 2 eps)).
    const double k_mag = 2.0 * params.omega0() / (c * (1.0 + std::sqrt(disc)));

    TransitionKinematics out;
    out.p = Vec3{};
    out.k = direction * k_mag;
    out.q = -out.k;
    out.omega = c * norm(out.k);
    out.q_longitudinal = dot(out.q, out.k) / norm(out.k);
    return out;
}

Vec3 recoil_velocity(const Vec3& q, double m) noexcept { return -q / m; }

Vec3 momentum_residual(const TransitionKinematics& kin) noexcept { return kin.p - (kin.q + kin.k); }

double energy_residual(const TransitionKinematics& kin, const PhysicalParams& params) noexcept {
    const double m = params.m();
    const double w0 = params.omega0();
    const double before = 0.5 * w0 + norm2(kin.q + kin.k) / (2.0 * m);
    const double after = -0.5 * w0 - norm2(kin.q) / (2.0 * m) + kin.omega;
    return before - after;
}

TransitionKinematics shift_to_frame(const TransitionKinematics& rest, const Vec3& p) noexcept {
    TransitionKinematics out = rest;
    out.p = rest.p + p;
    out.q = rest.q + p;
    const double k_mag = norm(out.k);
    out.q_longitudinal = k_mag > 0.0 ? dot(out.q, out.k) / k_mag : 0.0;
    return out;
}

}  // namespace lqvac::kinematics
