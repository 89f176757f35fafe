// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
//
//   acceptance [--out-dir DIR]
//
// DIR receives the CLI output files compared by the determinism criterion.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "lqvac/cli.hpp"
#include "lqvac/kinematics.hpp"
#include "lqvac/oracles.hpp"
#include "lqvac/oscillator.hpp"
#include "lqvac/quadrature.hpp"
#include "lqvac/vacuum.hpp"
#include "lqvac/wavefunction.hpp"
#include "lqvac/zbw.hpp"

using namespace lqvac;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Outcome oscillator_mirror() {
    bool ok = true;
    std::string detail;
    // c only enters epsilon; it is raised so that omega0 = 1 is a valid regime.
    for (const auto& p : {PhysicalParams(1.0, 1.0, 1.0, 0.1, 10.0), PhysicalParams(1.0, 0.01, 1.0, 1e-4)}) {
        const auto grid = oscillator::GridSpec::for_params(p);
        const auto plus = oscillator::solve_spectrum(oscillator::discretize_hamiltonian(p, grid, +1), 1);
        const auto minus = oscillator::solve_spectrum(oscillator::discretize_hamiltonian(p, grid, -1), 1);
        const double dp = std::abs(plus.eigenvalues[0] - 0.5 * p.omega0());
        const double dm = std::abs(minus.eigenvalues[0] + 0.5 * p.omega0());
        const double ov = std::abs(oscillator::overlap(plus.eigenvectors[0], minus.eigenvectors[0], grid));
        ok = ok && dp <= 1e-4 && dm <= 1e-4 && ov >= 1.0 - 1e-10;
        detail += fmt("omega0=%g: |E0+ - w/2|=%.2e |E0- + w/2|=%.2e overlap=%.15f; ", p.omega0(), dp, dm, ov);
    }
    return {ok, detail};
}

Outcome kinematics_balance() {
    const PhysicalParams p(1.0, 0.01, 1.0, 1e-4);
    zbw::RandomStream rng(20240601);
    double max_p = 0.0;
    double max_e = 0.0;
    double max_qk = 0.0;
    double min_vk = 1e300;
    for (int i = 0; i < 100; ++i) {
        const double u = 2.0 * rng.uniform() - 1.0;
        const double phi = 2.0 * kPi * rng.uniform();
        const double s = std::sqrt(1.0 - u * u);
        const auto kin = kinematics::solve_photon_wavevector(p, {s * std::cos(phi), s * std::sin(phi), u});
        max_p = std::max(max_p, norm(kinematics::momentum_residual(kin)));
        max_e = std::max(max_e, std::abs(kinematics::energy_residual(kin, p)));
        max_qk = std::max(max_qk, norm(kin.q + kin.k));
        min_vk = std::min(min_vk, dot(kinematics::recoil_velocity(kin.q, p.m()), normalized(kin.k)));
    }
    const bool ok = p.epsilon() == 0.01 && max_p < 1e-10 && max_e < 1e-10 && max_qk == 0.0 && min_vk > 0.0;
    return {ok, fmt("eps=%g, 100 directions: max momentum residual %.2e, max energy residual %.2e, "
                    "max |q+k| %.1e, min v.khat %.6e",
                    p.epsilon(), max_p, max_e, max_qk, min_vk)};
}

Outcome gaussian_oracle() {
    std::vector<std::pair<oracles::Complex, Vec3>> sample{{{0.2, -5.0}, {0.0, 0.0, 0.0}},
                                                          {{5.0, 5.0}, {4.0, 0.0, 0.0}},
                                                          {{0.2, 5.0}, {0.0, 4.0, 0.0}},
                                                          {{5.0, -5.0}, {0.0, 0.0, 0.5}}};
    for (int i = 1; i <= 16; ++i) {
        const double s = i;
        const double wr = 0.2 + 4.8 * std::fmod(0.6180339887 * s, 1.0);
        const double wi = -5.0 + 10.0 * std::fmod(0.4142135624 * s, 1.0);
        const double r = 4.0 * std::fmod(0.7320508076 * s, 1.0);
        const double th = kPi * std::fmod(0.2360679775 * s, 1.0);
        const double ph = 2.0 * kPi * std::fmod(0.1622776602 * s, 1.0);
        sample.push_back(
            {{wr, wi}, {r * std::sin(th) * std::cos(ph), r * std::sin(th) * std::sin(ph), r * std::cos(th)}});
    }
    double worst = 0.0;
    for (const auto& [w, R] : sample) {
        const auto num = oracles::complex_gaussian_integral(w, R);
        const auto ref = oracles::complex_gaussian_closed_form(w, R);
        worst = std::max(worst, std::abs(num - ref) / std::abs(ref));
    }
    return {worst <= 1e-8, fmt("%zu (w, R) points, worst relative error %.2e", sample.size(), worst)};
}

Outcome lineshape_oracle() {
    const double omega = 1.0;
    const double gamma = 1e-3;
    const double c = 1.0;
    const double scale = 2.0 * kPi * std::sqrt(omega / c) / c;  // |residue| at x = 0
    bool ok = true;
    std::string detail = "gamma/omega=1e-3: ";
    for (double mult : {1.0, 2.0}) {
        const double x = -mult * c / gamma;
        const double decay = std::abs(oracles::photon_lineshape_integral(x, omega, gamma, {}, c)) / scale;
        const double expected = std::exp(gamma * x / (2.0 * c));
        const double dev = std::abs(decay / expected - 1.0);
        ok = ok && dev <= 0.05;
        detail += fmt("x=%gc/gamma decay %.6f vs %.6f (dev %.2e); ", -mult, decay, expected, dev);
    }
    const double inside = std::abs(oracles::photon_lineshape_integral(-c / gamma, omega, gamma, {}, c));
    double worst_out = 0.0;
    for (double mult : {0.5, 1.0, 2.0}) {
        worst_out = std::max(worst_out,
                             std::abs(oracles::photon_lineshape_integral(mult * c / gamma, omega, gamma, {}, c)) / inside);
    }
    ok = ok && worst_out <= 0.05;
    detail += fmt("outside/inside max %.2e", worst_out);
    return {ok, detail};
}

Outcome normalization() {
    bool ok = true;
    std::string detail;
    for (double gt : {0.5, 2.0, 10.0}) {
        const double dev = std::abs(oracles::normalization_rel(gt, 1.0, 1.0) + std::expm1(-gt));
        ok = ok && dev <= 1e-6;
        detail += fmt("rel gt=%g dev %.1e; ", gt, dev);
    }
    const PhysicalParams p(1.0, 0.01, 1.0, 1e-3);
    for (auto [rho, t] : {std::pair{0.5, 0.0}, std::pair{2.0, 1.5}, std::pair{3.0, 50.0}}) {
        const double a = wavefunction::width(rho, t, p);
        const auto integral = quad::integrate(
            [&](double r) { return 4.0 * kPi * r * r * wavefunction::density_cm({r, 0.0, 0.0}, rho, t, p); }, 0.0,
            15.0 * a, 1e-13);
        const double dev = std::abs(integral.value - 1.0);
        ok = ok && dev <= 1e-8;
        detail += fmt("cm (rho=%g,t=%g) dev %.1e; ", rho, t, dev);
    }
    return {ok, detail};
}

Outcome factorization() {
    const PhysicalParams p(1.3, 0.02, 0.8, 0.004, 1.1);
    const wavefunction::WavefieldConfig cfg{p};
    double worst = 0.0;
    int n = 0;
    for (int i = 1; i <= 50; ++i) {
        const double s = i;
        const double t = 0.5 + 0.37 * s;
        const double rho = p.c() * t * (0.05 + 0.9 * std::fmod(0.618 * s, 1.0));
        const double theta = 0.1 + 2.9 * std::fmod(0.414 * s, 1.0);
        const double phi = 2.0 * kPi * std::fmod(0.732 * s, 1.0);
        const Vec3 r_at{0.3 * std::sin(s), -0.2 * std::cos(1.7 * s), 0.002 * s};
        const Vec3 rel{rho * std::sin(theta) * std::cos(phi), rho * std::sin(theta) * std::sin(phi),
                       rho * std::cos(theta)};
        const wavefunction::EvaluationPoint pt{r_at, r_at + rel, t};
        const double prod = wavefunction::density_rel(pt.rho(), pt.theta_prime(cfg.z_axis), t, p) *
                            wavefunction::density_cm(pt.center_of_mass(p), pt.rho(), t, p);
        const double amp2 = std::norm(wavefunction::amplitude(pt, cfg));
        worst = std::max(worst, std::abs(amp2 - prod) / prod);
        ++n;
    }
    return {worst <= 1e-12, fmt("%d points inside the light cone, worst relative mismatch %.2e", n, worst)};
}

Outcome width_law() {
    bool ok = true;
    double worst_jump = 0.0;
    bool min_exact = true;
    bool monotone = true;
    for (const auto& p : {PhysicalParams(1.0, 0.01, 1.0, 1e-4), PhysicalParams(0.7, 0.02, 1.3, 1e-3, 1.9)}) {
        for (double rho : {0.25, 1.0, 4.0, 10.0}) {
            min_exact = min_exact && wavefunction::width(rho, 2.0 * rho / p.c(), p) == p.a0();
            const double a = wavefunction::width(rho, 0.0, p);
            const double jump = 4.0 * rho * rho / (p.c() * p.c() * p.m() * p.m() * p.a0() * p.a0());
            worst_jump = std::max(worst_jump, std::abs((a * a - p.a0() * p.a0()) / jump - 1.0));
            const auto prof = zbw::width_profile(rho, 5.0 * rho / p.c(), 257, p);
            min_exact = min_exact && prof.minimum_width == p.a0() && prof.minimum_time == 2.0 * rho / p.c();
            for (std::size_t i = 1; i < prof.widths.size(); ++i) {
                monotone = monotone && (i <= prof.minimum_index ? prof.widths[i] < prof.widths[i - 1]
                                                                : prof.widths[i] > prof.widths[i - 1]);
            }
        }
    }
    // "Exactly" for the jump identity means to rounding: a few ulp of the squared width.
    ok = min_exact && worst_jump <= 1e-14 && monotone;
    return {ok, fmt("a(rho,2rho/c)==a0: %s, jump identity worst rel %.1e, profile down-then-up: %s",
                    min_exact ? "yes" : "no", worst_jump, monotone ? "yes" : "no")};
}

Outcome casimir() {
    const double ref = vacuum::casimir_reference(1.0);
    std::vector<double> forces;
    double worst = 0.0;
    for (double cutoff : {100.0, 300.0, 1000.0}) {
        const double f = vacuum::casimir_force({1.0, cutoff}).force;
        forces.push_back(f);
        worst = std::max(worst, std::abs(f / ref - 1.0));
    }
    const auto [lo, hi] = std::minmax_element(forces.begin(), forces.end());
    const double spread = (*hi - *lo) / std::abs(ref);
    const double f2 = vacuum::casimir_force({2.0, 100.0}).force;
    const double scaling = std::abs(16.0 * f2 / forces[0] - 1.0);
    const bool ok = worst <= 1e-3 && spread < 1e-3 && scaling <= 2e-3;
    return {ok, fmt("F(d=1) worst deviation from -pi^2/240 %.2e, spread over Lambda d {100,300,1000} %.2e, "
                    "16 F(2)/F(1) - 1 = %.2e",
                    worst, spread, scaling)};
}

Outcome zpe_density() {
    double worst = 0.0;
    for (double wc : {0.5, 1.0, 10.0}) {
        const auto num = quad::integrate([](double w) { return vacuum::zpe_spectral_density(w); }, 0.0, wc, 1e-13);
        worst = std::max(worst, std::abs(num.value / vacuum::zpe_energy_density(wc) - 1.0));
    }
    return {worst <= 1e-10, fmt("cutoffs {0.5, 1, 10}: worst relative error %.1e", worst)};
}

Outcome zitterbewegung() {
    const PhysicalParams p(1.0, 0.01, 1.0, 1e-4);
    const double lambda_c = derived_scales(p).compton_wavelength;
    const auto traj = zbw::run_cycles(p, 100'000, 31337);
    const auto st = zbw::statistics(traj);
    bool exact = true;
    for (const auto& pr : traj.pairs) {
        const Vec3 net = pr.emission_momentum_change + pr.absorption_momentum_change;
        exact = exact && net.x == 0.0 && net.y == 0.0 && net.z == 0.0;
    }
    const double step_dev = std::max(std::abs(st.step_min / lambda_c - 1.0), std::abs(st.step_max / lambda_c - 1.0));
    const double cos2_dev = std::abs(st.mean_cos2_theta - 0.2);
    const bool ok = step_dev <= 0.02 && exact && st.mean_within_bound && cos2_dev <= 0.002;
    return {ok, fmt("N=1e5: step/lambda_C in [%.6f, %.6f], momentum cancels exactly: %s, |mean| max %.2e vs band "
                    "%.2e, <cos^2> = %.5f",
                    st.step_min / lambda_c, st.step_max / lambda_c, exact ? "yes" : "no",
                    std::max({std::abs(st.mean_displacement.x), std::abs(st.mean_displacement.y),
                              std::abs(st.mean_displacement.z)}),
                    st.mean_bound, st.mean_cos2_theta)};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism(const std::filesystem::path& dir) {
    const std::vector<std::vector<std::string>> cases{
        {"spectrum", "--omega0", "1", "--n", "4"},
        {"oscillator-solve"},
        {"kinematics", "--samples", "100", "--seed", "7"},
        {"width", "--rho", "1", "--t", "0", "--a0", "1", "--m", "1"},
        {"width-profile", "--rho", "2"},
        {"density", "rel", "--t", "20", "--gamma", "0.001"},
        {"density", "cm", "--t", "20", "--gamma", "0.001"},
        {"density", "joint", "--t", "20", "--gamma", "0.001"},
        {"oracle", "gaussian", "--w-re", "1", "--w-im", "1", "--R", "1", "0", "0"},
        {"oracle", "lineshape"},
        {"oracle", "norm", "--gamma", "1"},
        {"zpe"},
        {"casimir", "--d", "1", "--cutoff", "100", "300", "1000"},
        {"zbw", "run", "--cycles", "2000", "--seed", "5"},
        {"zbw", "stats", "--cycles", "20000", "--seed", "5"},
        {"scales"},
    };
    std::filesystem::create_directories(dir);
    int identical = 0;
    std::string failed;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        for (const char* format : {"json", "csv"}) {
            std::string files[2];
            bool ran = true;
            for (int rep = 0; rep < 2; ++rep) {
                const auto path = dir / fmt("determinism_%02zu_%s_%d", i, format, rep);
                auto args = cases[i];
                args.insert(args.end(), {"--format", format, "--out", path.string()});
                std::ostringstream out;
                std::ostringstream err;
                ran = ran && lqvac::cli::run(args, out, err) == 0;
                files[rep] = slurp(path);
            }
            if (ran && !files[0].empty() && files[0] == files[1]) {
                ++identical;
            } else {
                failed += " " + cases[i][0] + "(" + format + ")";
            }
        }
    }
    const int total = static_cast<int>(2 * cases.size());
    return {identical == total,
            fmt("%d/%d runs byte-identical across all subcommands%s", identical, total, failed.c_str())};
}

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path out_dir = std::filesystem::temp_directory_path() / "lqvac_acceptance";
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--out-dir") out_dir = argv[i + 1];
    }
    out_dir /= "acceptance_cli";

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"oscillator mirror spectrum", oscillator_mirror},
        {"kinematics balance", kinematics_balance},
        {"Gaussian oracle", gaussian_oracle},
        {"lineshape oracle", lineshape_oracle},
        {"normalization", normalization},
        {"factorization", factorization},
        {"width law", width_law},
        {"Casimir force", casimir},
        {"ZPE density", zpe_density},
        {"Zitterbewegung Monte Carlo", zitterbewegung},
        {"CLI determinism", [&] { return determinism(out_dir); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s  %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
