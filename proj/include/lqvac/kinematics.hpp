#pragma once

#include "lqvac/model.hpp"
#include "lqvac/vec3.hpp"

namespace lqvac::kinematics {

/// One ground-state -> negative-energy transition with photon emission.
struct TransitionKinematics {
    Vec3 p;                 // initial particle momentum
    Vec3 q;                 // negative-energy particle momentum
    Vec3 k;                 // photon wavevector
    double omega = 0.0;     // c |k|
    double q_longitudinal;  // q . k / |k|
};

/// Solves c k = omega0 + k^2/(2m) in the initial rest frame (p = 0, q = -k)
/// for the root continuous with k = omega0/c as epsilon -> 0.
/// Throws RegimeError when 1 - 2 epsilon < 0.
TransitionKinematics solve_photon_wavevector(const PhysicalParams& params, const Vec3& direction);

/// Negative-mass relation v = -q/m.
Vec3 recoil_velocity(const Vec3& q, double m) noexcept;

/// Momentum balance p - (q + k), exactly zero for a consistent transition.
Vec3 momentum_residual(const TransitionKinematics& kin) noexcept;

/// omega0/2 + |q + k|^2/(2m) - (-omega0/2 - |q|^2/(2m) + omega).
double energy_residual(const TransitionKinematics& kin, const PhysicalParams& params) noexcept;

/// Lab-frame copy for an initial particle momentum p: particle momenta are
/// shifted by p, the photon is unchanged, so p = q + k still holds. The
/// energy balance is only asserted in the rest frame.
TransitionKinematics shift_to_frame(const TransitionKinematics& rest, const Vec3& p) noexcept;

}  // namespace lqvac::kinematics
