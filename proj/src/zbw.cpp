#include "lqvac/zbw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lqvac/error.hpp"
#include "lqvac/kernels.hpp"
#include "lqvac/kinematics.hpp"

namespace lqvac::zbw {

namespace {

// Orthonormal frame (e1, e2, axis).
struct Frame {
    Vec3 e1;
    Vec3 e2;
    Vec3 axis;
};

Frame frame_for(const Vec3& axis) {
    const double len = norm(axis);
    if (!(std::abs(len - 1.0) <= 1e-12)) {
        throw ArgumentError("zbw: axis must be a unit vector");
    }
    if (axis == kUnitZ) {
        return {kUnitX, kUnitY, kUnitZ};
    }
    const Vec3 helper = std::abs(axis.x) < 0.9 ? kUnitX : kUnitY;
    const Vec3 e1 = normalized(cross(helper, axis));
    return {e1, cross(axis, e1), axis};
}

Vec3 draw(RandomStream& rng, const Frame& f) {
    while (true) {
        const double u = 2.0 * rng.uniform() - 1.0;
        const double phi = 2.0 * std::numbers::pi * rng.uniform();
        const double sin2 = 1.0 - u * u;
        if (rng.uniform() < sin2) {
            const double s = std::sqrt(sin2);
            return f.e1 * (s * std::cos(phi)) + f.e2 * (s * std::sin(phi)) + f.axis * u;
        }
    }
}

}  // namespace

WidthProfile width_profile(double rho, double t_max, std::size_t n_samples, const PhysicalParams& params) {
    if (!(rho > 0.0)) {
        throw ArgumentError("width_profile: rho must be > 0");
    }
    const double t_min = 2.0 * rho / params.c();
    if (!(t_max > t_min)) {
        throw ArgumentError("width_profile: t_max must exceed 2 rho / c");
    }
    if (n_samples < 32) {
        throw ArgumentError("width_profile: need at least 32 samples");
    }

    const double last = static_cast<double>(n_samples - 1);
    auto steps_to_min = static_cast<std::size_t>(std::llround(last * t_min / t_max));
    steps_to_min = std::clamp<std::size_t>(steps_to_min, 1, n_samples - 2);
    const double dt = t_min / static_cast<double>(steps_to_min);

    WidthProfile out;
    out.rho = rho;
    out.times.resize(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        out.times[i] = static_cast<double>(i) * dt;
    }
    out.times[steps_to_min] = t_min;

    out.widths.resize(n_samples);
    const std::vector<double> rhos(n_samples, rho);
    kernels::width_batch(rhos, out.times, {params.a0(), params.m(), params.c()}, out.widths);

    const auto it = std::min_element(out.widths.begin(), out.widths.end());
    out.minimum_index = static_cast<std::size_t>(it - out.widths.begin());
    out.minimum_time = out.times[out.minimum_index];
    out.minimum_width = *it;
    out.jump_at_zero = out.widths.front() - params.a0();
    if (out.minimum_index != steps_to_min) {
        throw NumericalError("width_profile: internal error, minimum not at the 2 rho / c node");
    }
    return out;
}

Vec3 sample_direction(RandomStream& rng, const Vec3& axis) { return draw(rng, frame_for(axis)); }

Trajectory run_cycles(const PhysicalParams& params, std::size_t n_cycles, std::uint64_t seed, const Vec3& axis) {
    if (n_cycles < 1) {
        throw ArgumentError("run_cycles: need at least one cycle");
    }
    const Frame frame = frame_for(axis);
    const double dwell = 1.0 / params.omega0();

    Trajectory out;
    out.seed = seed;
    out.pairs.reserve(n_cycles);
    out.cumulative_positions.reserve(n_cycles);
    RandomStream rng(seed);
    Vec3 position;
    for (std::size_t i = 0; i < n_cycles; ++i) {
        const Vec3 direction = draw(rng, frame);
        const auto kin = kinematics::solve_photon_wavevector(params, direction);
        RecoilPair pair;
        pair.photon_direction = direction;
        pair.emission_momentum_change = kin.q - kin.p;
        pair.absorption_momentum_change = kin.p - kin.q;
        pair.cycle_displacement = kinematics::recoil_velocity(kin.q, params.m()) * dwell;
        position += pair.cycle_displacement;
        out.pairs.push_back(pair);
        out.cumulative_positions.push_back(position);
    }
    return out;
}

TrajectoryStats statistics(const Trajectory& trajectory, const Vec3& axis) {
    if (trajectory.pairs.empty()) {
        throw ArgumentError("statistics: empty trajectory");
    }
    const Frame frame = frame_for(axis);
    TrajectoryStats s;
    s.cycles = trajectory.pairs.size();
    s.step_min = std::numeric_limits<double>::infinity();
    Vec3 sum;
    double sum_sq = 0.0;
    double sum_step = 0.0;
    double sum_cos2 = 0.0;
    for (const RecoilPair& pair : trajectory.pairs) {
        const double step = norm(pair.cycle_displacement);
        sum += pair.cycle_displacement;
        sum_sq += step * step;
        sum_step += step;
        s.step_min = std::min(s.step_min, step);
        s.step_max = std::max(s.step_max, step);
        const double cz = dot(pair.photon_direction, frame.axis);
        sum_cos2 += cz * cz;
        s.max_momentum_imbalance =
            std::max(s.max_momentum_imbalance, norm(pair.emission_momentum_change + pair.absorption_momentum_change));
    }
    const double n = static_cast<double>(s.cycles);
    s.mean_displacement = sum / n;
    s.rms_displacement = std::sqrt(sum_sq / n);
    s.step_mean = sum_step / n;
    s.mean_cos2_theta = sum_cos2 / n;
    s.mean_bound = 3.0 * s.step_mean / std::sqrt(n);
    s.mean_within_bound = std::abs(s.mean_displacement.x) <= s.mean_bound &&
                          std::abs(s.mean_displacement.y) <= s.mean_bound &&
                          std::abs(s.mean_displacement.z) <= s.mean_bound;
    s.final_position = trajectory.cumulative_positions.back();
    return s;
}

}  // namespace lqvac::zbw
