#pragma once

namespace lqvac {

/// Model constants in natural units (hbar = 1).
///
/// Construction validates the model's regime: every constant strictly
/// positive, gamma < omega0 (narrow line), and epsilon = omega0/(m c^2) < 1.
/// epsilon at or above `low_energy_threshold` is accepted but flagged by
/// low_energy_regime().
class PhysicalParams {
  public:
    static constexpr double kDefaultLowEnergyThreshold = 0.1;

    PhysicalParams(double m, double omega0, double a0, double gamma, double c = 1.0,
                   double low_energy_threshold = kDefaultLowEnergyThreshold);

    double m() const noexcept { return m_; }
    double omega0() const noexcept { return omega0_; }
    double a0() const noexcept { return a0_; }
    double gamma() const noexcept { return gamma_; }
    double c() const noexcept { return c_; }

    /// omega0 / (m c^2)
    double epsilon() const noexcept { return omega0_ / (m_ * c_ * c_); }
    double low_energy_threshold() const noexcept { return low_energy_threshold_; }
    bool low_energy_regime() const noexcept { return epsilon() < low_energy_threshold_; }

    /// Copy with a different resonance frequency; revalidates.
    PhysicalParams with_omega0(double omega0) const;

  private:
    double m_;
    double omega0_;
    double a0_;
    double gamma_;
    double c_;
    double low_energy_threshold_;
};

struct KinematicScales {
    double compton_wavelength;   // 1/(m c)
    double photon_wavelength;    // 2 pi c / omega0
    double lifetime;             // 1/omega0
    double localization_radius;  // c/omega0
    double epsilon;              // omega0/(m c^2)
};

KinematicScales derived_scales(const PhysicalParams& params) noexcept;

}  // namespace lqvac
