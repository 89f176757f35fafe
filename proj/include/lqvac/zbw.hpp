#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "lqvac/model.hpp"
#include "lqvac/vec3.hpp"

// Zitterbewegung from repeated emission / re-absorption cycles.
namespace lqvac::zbw {

struct WidthProfile {
    double rho = 0.0;
    std::vector<double> times;
    std::vector<double> widths;
    double jump_at_zero = 0.0;  // widths[0] - a0
    std::size_t minimum_index = 0;
    double minimum_time = 0.0;
    double minimum_width = 0.0;
};

/// Samples a(rho, t) on a uniform grid starting at t = 0 whose step divides
/// 2 rho / c, so the minimum time is a grid node. The grid has n_samples
/// nodes and ends within one step of t_max.
WidthProfile width_profile(double rho, double t_max, std::size_t n_samples, const PhysicalParams& params);

/// Seeded stream of uniform doubles in [0, 1): std::mt19937_64 (whose output
/// sequence is fixed by the C++ standard) with the top 53 bits scaled by 2^-53,
/// so a seed reproduces the same draws on every conforming platform.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    double uniform() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 engine_;
};

/// Emission direction with density proportional to sin^2(theta) about
/// `axis`, uniform in azimuth (rejection against the uniform sphere).
Vec3 sample_direction(RandomStream& rng, const Vec3& axis = kUnitZ);

struct RecoilPair {
    Vec3 emission_momentum_change;    // q - p = -k
    Vec3 absorption_momentum_change;  // +k, back to rest
    Vec3 photon_direction;
    Vec3 cycle_displacement;          // v tau with v = -q/m, tau = 1/omega0
};

struct Trajectory {
    std::uint64_t seed = 0;
    std::vector<RecoilPair> pairs;
    std::vector<Vec3> cumulative_positions;
};

/// nCycles emission / re-absorption cycles starting from rest at the origin.
/// Deterministic in (params, n_cycles, seed, axis).
Trajectory run_cycles(const PhysicalParams& params, std::size_t n_cycles, std::uint64_t seed,
                      const Vec3& axis = kUnitZ);

struct TrajectoryStats {
    std::size_t cycles = 0;
    Vec3 mean_displacement;
    double rms_displacement = 0.0;  // sqrt(mean |step|^2)
    double step_min = 0.0;
    double step_max = 0.0;
    double step_mean = 0.0;
    double mean_cos2_theta = 0.0;   // photon direction about the axis
    double mean_bound = 0.0;        // 3 step_mean / sqrt(N)
    bool mean_within_bound = false;
    double max_momentum_imbalance = 0.0;  // max |emission + absorption|
    Vec3 final_position;
};

TrajectoryStats statistics(const Trajectory& trajectory, const Vec3& axis = kUnitZ);

}  // namespace lqvac::zbw
