#include "lqvac/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "lqvac/error.hpp"
#include "lqvac/kernels.hpp"
#include "lqvac/kinematics.hpp"
#include "lqvac/model.hpp"
#include "lqvac/oracles.hpp"
#include "lqvac/oscillator.hpp"
#include "lqvac/vacuum.hpp"
#include "lqvac/wavefunction.hpp"
#include "lqvac/zbw.hpp"
#include "output.hpp"

namespace lqvac::cli {
namespace {

constexpr double kPi = std::numbers::pi;

struct ParamFlags {
    double m = 1.0;
    double omega0 = 0.01;
    double a0 = 1.0;
    double gamma = 1e-4;
    double c = 1.0;
    double low_energy_threshold = 0.1;

    void add(CLI::App* app) {
        app->add_option("--m", m, "particle mass")->capture_default_str();
        app->add_option("--omega0", omega0, "oscillator frequency")->capture_default_str();
        app->add_option("--a0", a0, "initial packet width")->capture_default_str();
        app->add_option("--gamma", gamma, "decay rate")->capture_default_str();
        app->add_option("--c", c, "speed of light")->capture_default_str();
        app->add_option("--low-energy-threshold", low_energy_threshold, "epsilon below which the regime is flagged low-energy")
            ->capture_default_str();
    }
    PhysicalParams build() const { return PhysicalParams(m, omega0, a0, gamma, c, low_energy_threshold); }
    Json json() const {
        return Json{{"m", m}, {"omega0", omega0}, {"a0", a0}, {"gamma", gamma}, {"c", c},
                    {"low_energy_threshold", low_energy_threshold}};
    }
};

struct Common {
    std::string format = "json";
    std::string out;
    std::string config;
};

Vec3 to_vec(const std::vector<double>& v) { return {v.at(0), v.at(1), v.at(2)}; }

std::string config_value(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
    if (v.is_number_float()) return format_number(v.get<double>());
    throw ArgumentError("config: unsupported value " + v.dump());
}

// Fills every option of `sub` that was not given on the command line from
// the flat JSON object in `path`.
void apply_config(CLI::App* sub, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("config: cannot read " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ArgumentError(std::string("config: ") + e.what());
    }
    if (!doc.is_object()) throw ArgumentError("config: top level must be an object");
    for (const auto& [key, value] : doc.items()) {
        if (key == "config") throw ArgumentError("config: nested config files are not supported");
        CLI::Option* opt = sub->get_option_no_throw("--" + key);
        if (opt == nullptr) opt = sub->get_option_no_throw(key);
        if (opt == nullptr || key == "help") {
            throw ArgumentError("config: unknown key '" + key + "' for " + sub->get_name());
        }
        if (opt->count() > 0) continue;  // command line wins
        if (value.is_array()) {
            for (const auto& e : value) opt->add_result(config_value(e));
        } else {
            opt->add_result(config_value(value));
        }
        opt->run_callback();
    }
}

Report spectrum(double omega0, std::int64_t n) {
    Report r;
    r.inputs = {{"command", "spectrum"}, {"omega0", omega0}, {"n", n}};
    r.table.columns = {"n", "energy"};
    const auto e = oscillator::exact_spectrum(omega0, n);
    for (std::size_t i = 0; i < e.size(); ++i) r.table.add_row({static_cast<double>(i), e[i]});
    return r;
}

Report oscillator_solve(const ParamFlags& pf, std::size_t points, double half_width, std::size_t states) {
    const auto params = pf.build();
    auto grid = oscillator::GridSpec::for_params(params, points);
    if (half_width > 0.0) grid.half_width = half_width;
    const auto plus = oscillator::solve_spectrum(oscillator::discretize_hamiltonian(params, grid, +1), states);
    const auto minus = oscillator::solve_spectrum(oscillator::discretize_hamiltonian(params, grid, -1), states);
    const auto exact = oscillator::exact_spectrum(params.omega0(), static_cast<std::int64_t>(states) - 1);

    Report r;
    r.inputs = {{"command", "oscillator-solve"}, {"params", pf.json()}, {"grid_points", points},
                {"half_width", grid.half_width}, {"states", states}};
    r.table.columns = {"n", "energy_plus", "energy_minus", "exact_plus"};
    for (std::size_t n = 0; n < states; ++n) {
        r.table.add_row({static_cast<double>(n), plus.eigenvalues[n], minus.eigenvalues[n], exact[n]});
    }
    r.diagnostics = {{"spacing", grid.spacing()},
                     {"ground_overlap", std::abs(oscillator::overlap(plus.eigenvectors[0], minus.eigenvectors[0], grid))},
                     {"ground_error_plus", plus.eigenvalues[0] - 0.5 * params.omega0()},
                     {"ground_error_minus", minus.eigenvalues[0] + 0.5 * params.omega0()}};
    return r;
}

Report kinematics_cmd(const ParamFlags& pf, const std::vector<double>& direction, std::size_t samples,
                      std::uint64_t seed) {
    const auto params = pf.build();
    std::vector<Vec3> dirs;
    if (samples == 0) {
        dirs.push_back(normalized(to_vec(direction)));
    } else {
        zbw::RandomStream rng(seed);
        for (std::size_t i = 0; i < samples; ++i) {
            const double u = 2.0 * rng.uniform() - 1.0;
            const double phi = 2.0 * kPi * rng.uniform();
            const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
            dirs.push_back({s * std::cos(phi), s * std::sin(phi), u});
        }
    }

    Report r;
    r.inputs = {{"command", "kinematics"}, {"params", pf.json()}, {"direction", direction},
                {"samples", samples}, {"seed", seed}};
    r.table.columns = {"dir_x", "dir_y", "dir_z", "k_x", "k_y", "k_z", "omega", "q_x", "q_y", "q_z",
                       "v_x", "v_y", "v_z", "momentum_residual", "energy_residual", "v_dot_khat"};
    double max_p = 0.0;
    double max_e = 0.0;
    for (const auto& d : dirs) {
        const auto kin = kinematics::solve_photon_wavevector(params, d);
        const Vec3 v = kinematics::recoil_velocity(kin.q, params.m());
        const double pres = norm(kinematics::momentum_residual(kin));
        const double eres = kinematics::energy_residual(kin, params);
        max_p = std::max(max_p, pres);
        max_e = std::max(max_e, std::abs(eres));
        r.table.add_row({d.x, d.y, d.z, kin.k.x, kin.k.y, kin.k.z, kin.omega, kin.q.x, kin.q.y, kin.q.z, v.x, v.y,
                         v.z, pres, eres, dot(v, normalized(kin.k))});
    }
    r.scalar_result = samples == 0;
    r.diagnostics = {{"epsilon", params.epsilon()},
                     {"low_energy_regime", params.low_energy_regime()},
                     {"max_momentum_residual", max_p},
                     {"max_energy_residual", max_e}};
    return r;
}

Report width_cmd(const ParamFlags& pf, double rho, double t) {
    const auto params = pf.build();
    Report r;
    r.inputs = {{"command", "width"}, {"params", pf.json()}, {"rho", rho}, {"t", t}};
    r.table.columns = {"width"};
    r.table.add_row({wavefunction::width(rho, t, params)});
    r.scalar_result = true;
    r.diagnostics = {{"minimum_time", 2.0 * rho / params.c()}, {"minimum_width", params.a0()}};
    return r;
}

Report width_profile_cmd(const ParamFlags& pf, double rho, double t_max, std::size_t samples) {
    const auto params = pf.build();
    if (t_max <= 0.0) t_max = 4.0 * rho / params.c();
    const auto prof = zbw::width_profile(rho, t_max, samples, params);
    Report r;
    r.inputs = {{"command", "width-profile"}, {"params", pf.json()}, {"rho", rho}, {"t_max", t_max},
                {"samples", samples}};
    r.table.columns = {"t", "width"};
    for (std::size_t i = 0; i < prof.times.size(); ++i) r.table.add_row({prof.times[i], prof.widths[i]});
    r.diagnostics = {{"jump_at_zero", prof.jump_at_zero},
                     {"minimum_index", prof.minimum_index},
                     {"minimum_time", prof.minimum_time},
                     {"minimum_width", prof.minimum_width}};
    return r;
}

struct DensityFlags {
    std::string kind;
    double t = 10.0;
    double rho_max = 0.0;
    std::size_t n_rho = 32;
    std::size_t n_theta = 17;
    std::vector<double> r_at{0.0, 0.0, 0.0};
};

Report density_cmd(const ParamFlags& pf, const DensityFlags& df) {
    static const std::map<std::string, wavefunction::DensityKind> kinds{
        {"rel", wavefunction::DensityKind::relative},
        {"cm", wavefunction::DensityKind::center_of_mass},
        {"joint", wavefunction::DensityKind::joint}};
    const auto it = kinds.find(df.kind);
    if (it == kinds.end()) throw ArgumentError("density: kind must be rel, cm or joint");
    if (df.n_rho < 1 || df.n_theta < 2) throw ArgumentError("density: need n-rho >= 1 and n-theta >= 2");
    const auto params = pf.build();
    const wavefunction::WavefieldConfig cfg{params};
    const double rho_max = df.rho_max > 0.0 ? df.rho_max : params.c() * df.t;
    const Vec3 r_at = to_vec(df.r_at);

    std::vector<wavefunction::EvaluationPoint> pts;
    std::vector<std::pair<double, double>> coords;
    for (std::size_t i = 1; i <= df.n_rho; ++i) {
        const double rho = rho_max * static_cast<double>(i) / static_cast<double>(df.n_rho);
        for (std::size_t j = 0; j < df.n_theta; ++j) {
            const double theta = kPi * static_cast<double>(j) / static_cast<double>(df.n_theta - 1);
            pts.push_back({r_at, r_at + Vec3{rho * std::sin(theta), 0.0, rho * std::cos(theta)}, df.t});
            coords.emplace_back(rho, theta);
        }
    }
    const auto field = wavefunction::evaluate_density(it->second, pts, cfg);

    Report r;
    r.inputs = {{"command", "density"}, {"kind", df.kind}, {"params", pf.json()}, {"t", df.t},
                {"rho_max", rho_max}, {"n_rho", df.n_rho}, {"n_theta", df.n_theta}, {"r_at", df.r_at}};
    r.table.columns = {"rho", "theta", "density"};
    for (std::size_t i = 0; i < pts.size(); ++i) r.table.add_row({coords[i].first, coords[i].second, field.values[i]});
    r.diagnostics = {{"backend", kernels::backend_name(kernels::active_backend())}};
    return r;
}

struct OracleFlags {
    std::string kind;
    double w_re = 1.0;
    double w_im = 0.0;
    std::vector<double> R{0.0, 0.0, 0.0};
    std::vector<double> x;
    double omega_res = 1.0;
    double gamma = 1e-3;
    double c = 1.0;
    std::vector<double> t;
    double rel_tol = 1e-8;
    std::size_t max_subdivisions = 4000;
};

Report oracle_cmd(const OracleFlags& of) {
    oracles::QuadratureSpec spec;
    spec.rel_tolerance = of.rel_tol;
    spec.max_subdivisions = of.max_subdivisions;
    spec.validate();

    Report r;
    Json inputs = {{"command", "oracle"}, {"kind", of.kind}, {"rel_tol", of.rel_tol},
                   {"max_subdivisions", of.max_subdivisions}};
    if (of.kind == "gaussian") {
        const oracles::Complex w(of.w_re, of.w_im);
        const Vec3 R = to_vec(of.R);
        const auto num = oracles::complex_gaussian_integral(w, R, spec);
        const auto ref = oracles::complex_gaussian_closed_form(w, R);
        inputs["w_re"] = of.w_re;
        inputs["w_im"] = of.w_im;
        inputs["R"] = of.R;
        r.table.columns = {"numeric_re", "numeric_im", "closed_re", "closed_im", "rel_error"};
        r.table.add_row({num.real(), num.imag(), ref.real(), ref.imag(), std::abs(num - ref) / std::abs(ref)});
        r.scalar_result = true;
    } else if (of.kind == "lineshape") {
        std::vector<double> xs = of.x;
        if (xs.empty()) xs = {-of.c / of.gamma, -2.0 * of.c / of.gamma, of.c / of.gamma};
        inputs["x"] = xs;
        inputs["omega_res"] = of.omega_res;
        inputs["gamma"] = of.gamma;
        inputs["c"] = of.c;
        r.table.columns = {"x", "re", "im", "modulus", "pole_modulus"};
        for (double x : xs) {
            const auto v = oracles::photon_lineshape_integral(x, of.omega_res, of.gamma, spec, of.c);
            const auto p = oracles::photon_lineshape_pole(x, of.omega_res, of.gamma, of.c);
            r.table.add_row({x, v.real(), v.imag(), std::abs(v), std::abs(p)});
        }
    } else if (of.kind == "norm") {
        std::vector<double> ts = of.t;
        if (ts.empty()) ts = {0.5 / of.gamma, 2.0 / of.gamma, 10.0 / of.gamma};
        inputs["t"] = ts;
        inputs["gamma"] = of.gamma;
        inputs["c"] = of.c;
        r.table.columns = {"t", "numeric", "exact", "abs_error"};
        for (double t : ts) {
            const double num = oracles::normalization_rel(t, of.gamma, of.c, spec);
            const double exact = -std::expm1(-of.gamma * t);
            r.table.add_row({t, num, exact, std::abs(num - exact)});
        }
    } else {
        throw ArgumentError("oracle: kind must be gaussian, lineshape or norm");
    }
    r.inputs = std::move(inputs);
    return r;
}

Report zpe_cmd(const ParamFlags& pf, double omega_cut) {
    const auto params = pf.build();
    if (omega_cut <= 0.0) omega_cut = params.omega0();
    const double radius = derived_scales(params).localization_radius;
    const double density = vacuum::zpe_energy_density(omega_cut, params.c());
    Report r;
    r.inputs = {{"command", "zpe"}, {"params", pf.json()}, {"omega_cut", omega_cut}};
    r.table.columns = {"omega_cut", "energy_density", "localization_radius", "localized_energy"};
    r.table.add_row({omega_cut, density, radius, density * 4.0 / 3.0 * kPi * radius * radius * radius});
    r.scalar_result = true;
    return r;
}

Report casimir_cmd(double d, const std::vector<double>& cutoffs, double c, double tol) {
    if (cutoffs.empty()) throw ArgumentError("casimir: need at least one cutoff");
    Report r;
    r.inputs = {{"command", "casimir"}, {"d", d}, {"cutoff", cutoffs}, {"c", c}, {"quad_tol", tol}};
    r.table.columns = {"cutoff", "force", "energy", "reference", "relative_deviation",
                       "panels", "truncation_bound", "rule_discrepancy"};
    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t i = 0; i < cutoffs.size(); ++i) {
        const auto res = vacuum::casimir_force({d, cutoffs[i], tol, c});
        r.table.add_row({cutoffs[i], res.force, res.energy, res.reference, res.force / res.reference - 1.0,
                         static_cast<double>(res.panels), res.truncation_bound, res.rule_discrepancy});
        lo = i == 0 ? res.force : std::min(lo, res.force);
        hi = i == 0 ? res.force : std::max(hi, res.force);
    }
    r.scalar_result = cutoffs.size() == 1;
    r.diagnostics = {{"cutoff_spread", (hi - lo) / std::abs(vacuum::casimir_reference(d, c))}};
    return r;
}

Report zbw_cmd(const ParamFlags& pf, const std::string& mode, std::size_t cycles, std::uint64_t seed,
               const std::vector<double>& axis_v) {
    if (mode != "run" && mode != "stats") throw ArgumentError("zbw: mode must be run or stats");
    const auto params = pf.build();
    const Vec3 axis = to_vec(axis_v);
    const auto traj = zbw::run_cycles(params, cycles, seed, axis);

    Report r;
    r.inputs = {{"command", "zbw"}, {"mode", mode}, {"params", pf.json()}, {"cycles", cycles}, {"seed", seed},
                {"axis", axis_v}, {"rng", "mt19937_64, top 53 bits / 2^53"}};
    if (mode == "run") {
        r.table.columns = {"cycle", "photon_x", "photon_y", "photon_z", "step_x", "step_y", "step_z",
                           "x", "y", "z"};
        for (std::size_t i = 0; i < traj.pairs.size(); ++i) {
            const auto& p = traj.pairs[i];
            const auto& pos = traj.cumulative_positions[i];
            r.table.add_row({static_cast<double>(i), p.photon_direction.x, p.photon_direction.y, p.photon_direction.z,
                             p.cycle_displacement.x, p.cycle_displacement.y, p.cycle_displacement.z, pos.x, pos.y,
                             pos.z});
        }
    } else {
        const auto st = zbw::statistics(traj, axis);
        r.table.columns = {"cycles", "mean_x", "mean_y", "mean_z", "rms_displacement", "step_min", "step_max",
                           "step_mean", "mean_cos2_theta", "mean_bound", "mean_within_bound",
                           "max_momentum_imbalance", "final_x", "final_y", "final_z"};
        r.table.add_row({static_cast<double>(st.cycles), st.mean_displacement.x, st.mean_displacement.y,
                         st.mean_displacement.z, st.rms_displacement, st.step_min, st.step_max, st.step_mean,
                         st.mean_cos2_theta, st.mean_bound, st.mean_within_bound ? 1.0 : 0.0,
                         st.max_momentum_imbalance, st.final_position.x, st.final_position.y, st.final_position.z});
        r.scalar_result = true;
    }
    r.diagnostics = {{"compton_wavelength", derived_scales(params).compton_wavelength}};
    return r;
}

Report scales_cmd(const ParamFlags& pf) {
    const auto params = pf.build();
    const auto s = derived_scales(params);
    Report r;
    r.inputs = {{"command", "scales"}, {"params", pf.json()}};
    r.table.columns = {"compton_wavelength", "photon_wavelength", "lifetime", "localization_radius", "epsilon"};
    r.table.add_row({s.compton_wavelength, s.photon_wavelength, s.lifetime, s.localization_radius, s.epsilon});
    r.scalar_result = true;
    r.diagnostics = {{"low_energy_regime", params.low_energy_regime()}};
    return r;
}

void emit(const Report& report, const Common& common, std::ostream& out) {
    const std::string text = common.format == "csv" ? to_csv(report) : to_json(report);
    if (common.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(common.out, std::ios::binary | std::ios::trunc);
    if (!file) throw ArgumentError("cannot open output file " + common.out);
    file << text;
    if (!file.flush()) throw ArgumentError("cannot write output file " + common.out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Localized quantum vacuum simulations", "lqvac"};
    app.require_subcommand(1, 1);

    ParamFlags pf;
    Common common;
    std::map<CLI::App*, std::function<Report()>> actions;

    auto add = [&](const std::string& name, const std::string& desc, bool with_params) {
        CLI::App* sub = app.add_subcommand(name, desc);
        if (with_params) pf.add(sub);
        sub->add_option("--format", common.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        sub->add_option("--out", common.out, "write the result to this file");
        sub->add_option("--config", common.config, "JSON file of flag values (flags given here override it)");
        return sub;
    };

    std::int64_t spectrum_n = 10;
    auto* sp = add("spectrum", "exact oscillator ladder omega0 (n + 1/2)", false);
    sp->add_option("--omega0", pf.omega0, "oscillator frequency")->capture_default_str();
    sp->add_option("--n", spectrum_n, "highest level")->capture_default_str();
    actions[sp] = [&] { return spectrum(pf.omega0, spectrum_n); };

    std::size_t osc_points = 2000;
    double osc_half_width = 0.0;
    std::size_t osc_states = 4;
    auto* os = add("oscillator-solve", "finite-difference spectra for both mass signs", true);
    os->add_option("--grid-points", osc_points)->capture_default_str();
    os->add_option("--half-width", osc_half_width, "box half-width (0 = 8 oscillator lengths)")->capture_default_str();
    os->add_option("--states", osc_states)->capture_default_str();
    actions[os] = [&] { return oscillator_solve(pf, osc_points, osc_half_width, osc_states); };

    std::vector<double> kin_dir{0.0, 0.0, 1.0};
    std::size_t kin_samples = 0;
    std::uint64_t seed = 1;
    auto* kn = add("kinematics", "photon wavevector and recoil for an emission direction", true);
    kn->add_option("--direction", kin_dir, "unit emission direction")->expected(3)->capture_default_str();
    kn->add_option("--samples", kin_samples, "random directions instead of --direction")->capture_default_str();
    kn->add_option("--seed", seed)->capture_default_str();
    actions[kn] = [&] { return kinematics_cmd(pf, kin_dir, kin_samples, seed); };

    double rho = 1.0;
    double t = 0.0;
    auto* wd = add("width", "centre-of-mass width a(rho, t)", true);
    wd->add_option("--rho", rho)->capture_default_str();
    wd->add_option("--t", t)->capture_default_str();
    actions[wd] = [&] { return width_cmd(pf, rho, t); };

    double t_max = 0.0;
    std::size_t profile_samples = 64;
    auto* wp = add("width-profile", "a(rho, t) on a grid through 2 rho / c", true);
    wp->add_option("--rho", rho)->capture_default_str();
    wp->add_option("--t-max", t_max, "end of the grid (0 = 4 rho / c)")->capture_default_str();
    wp->add_option("--samples", profile_samples)->capture_default_str();
    actions[wp] = [&] { return width_profile_cmd(pf, rho, t_max, profile_samples); };

    DensityFlags df;
    auto* dn = add("density", "rel | cm | joint density on a (rho, theta) grid", true);
    dn->add_option("kind", df.kind, "rel, cm or joint");
    dn->add_option("--t", df.t)->capture_default_str();
    dn->add_option("--rho-max", df.rho_max, "0 = c t")->capture_default_str();
    dn->add_option("--n-rho", df.n_rho)->capture_default_str();
    dn->add_option("--n-theta", df.n_theta)->capture_default_str();
    dn->add_option("--r-at", df.r_at, "particle position")->expected(3)->capture_default_str();
    actions[dn] = [&] { return density_cmd(pf, df); };

    OracleFlags of;
    auto* orc = add("oracle", "gaussian | lineshape | norm numerical checks", false);
    orc->add_option("kind", of.kind, "gaussian, lineshape or norm");
    orc->add_option("--w-re", of.w_re)->capture_default_str();
    orc->add_option("--w-im", of.w_im)->capture_default_str();
    orc->add_option("--R", of.R)->expected(3)->capture_default_str();
    orc->add_option("--x", of.x, "rho - c t values (default -c/gamma, -2c/gamma, c/gamma)");
    orc->add_option("--omega-res", of.omega_res)->capture_default_str();
    orc->add_option("--gamma", of.gamma)->capture_default_str();
    orc->add_option("--c", of.c)->capture_default_str();
    orc->add_option("--t", of.t, "times (default gamma t = 0.5, 2, 10)");
    orc->add_option("--rel-tol", of.rel_tol)->capture_default_str();
    orc->add_option("--max-subdivisions", of.max_subdivisions)->capture_default_str();
    actions[orc] = [&] { return oracle_cmd(of); };

    double omega_cut = 0.0;
    auto* zp = add("zpe", "zero-point energy density and localized vacuum energy", true);
    zp->add_option("--omega-cut", omega_cut, "0 = omega0")->capture_default_str();
    actions[zp] = [&] { return zpe_cmd(pf, omega_cut); };

    double cas_d = 1.0;
    std::vector<double> cas_cutoff{100.0};
    double cas_c = 1.0;
    double cas_tol = 1e-9;
    auto* cs = add("casimir", "regularized parallel-plate force", false);
    cs->add_option("--d", cas_d)->capture_default_str();
    cs->add_option("--cutoff", cas_cutoff, "one or more regulator scales")->capture_default_str();
    cs->add_option("--c", cas_c)->capture_default_str();
    cs->add_option("--quad-tol", cas_tol)->capture_default_str();
    actions[cs] = [&] { return casimir_cmd(cas_d, cas_cutoff, cas_c, cas_tol); };

    std::string zbw_mode;
    std::size_t cycles = 1000;
    std::vector<double> axis{0.0, 0.0, 1.0};
    auto* zb = add("zbw", "run | stats of the emission / re-absorption random walk", true);
    zb->add_option("mode", zbw_mode, "run or stats");
    zb->add_option("--cycles", cycles)->capture_default_str();
    zb->add_option("--seed", seed)->capture_default_str();
    zb->add_option("--axis", axis)->expected(3)->capture_default_str();
    actions[zb] = [&] { return zbw_cmd(pf, zbw_mode, cycles, seed, axis); };

    auto* sc = add("scales", "derived length and time scales", true);
    actions[sc] = [&] { return scales_cmd(pf); };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitValidation;
    }

    CLI::App* sub = app.get_subcommands().front();
    try {
        if (!common.config.empty()) apply_config(sub, common.config);
        emit(actions.at(sub)(), common, out);
    } catch (const CLI::Error& e) {
        err << "lqvac " << sub->get_name() << ": " << e.what() << "\n";
        return kExitValidation;
    } catch (const ArgumentError& e) {
        err << "lqvac " << sub->get_name() << ": " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "lqvac " << sub->get_name() << ": " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}

}  // namespace lqvac::cli
