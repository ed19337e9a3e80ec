// run.hpp: scenario execution behind the command-line front end
//
// Each scenario turns a RunSpec into one FigureSeries. Output is a pure
// function of the spec: no timestamps, fixed number formatting, and sweep
// rows ordered by parameter regardless of worker scheduling.

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "harmonium/collision.hpp"
#include "harmonium/entropy.hpp"
#include "harmonium/errors.hpp"
#include "harmonium/figure_series.hpp"
#include "harmonium/model.hpp"
#include "harmonium/observables.hpp"
#include "harmonium/one_matrix.hpp"
#include "harmonium/scale_dynamics.hpp"
#include "harmonium/spectral.hpp"
#include "harmonium/version.hpp"

namespace harmonium {

enum class Scenario { modes, evolve, energy, entropy, onematrix, spectral, quench, collision, figure1, figure2, sweep };

inline constexpr std::pair<Scenario, std::string_view> scenario_names[] = {
    {Scenario::modes, "modes"},       {Scenario::evolve, "evolve"},       {Scenario::energy, "energy"},
    {Scenario::entropy, "entropy"},   {Scenario::onematrix, "onematrix"}, {Scenario::spectral, "spectral"},
    {Scenario::quench, "quench"},     {Scenario::collision, "collision"}, {Scenario::figure1, "figure1"},
    {Scenario::figure2, "figure2"},   {Scenario::sweep, "sweep"},
};

inline std::string_view to_string(Scenario s)
{
    for (const auto& [k, n] : scenario_names) {
        if (k == s) {
            return n;
        }
    }
    return "unknown";
}

inline Scenario parse_scenario(std::string_view name)
{
    for (const auto& [k, n] : scenario_names) {
        if (n == name) {
            return k;
        }
    }
    throw domain_error("unknown scenario '" + std::string(name) + "'");
}

enum class OutputFormat { csv, json };

// Effective trap of the independent-particle comparison model.
struct OmegaE {
    enum class Kind { density, hartree_fock, value } kind{Kind::density};
    double value{0.0};

    double resolve(double omega0, double lambda) const
    {
        switch (kind) {
        case Kind::density: return density_optimal_frequency(normal_modes(omega0, lambda));
        case Kind::hartree_fock: return hartree_fock_frequency(omega0, lambda);
        case Kind::value: return value;
        }
        return value;
    }

    std::string describe() const
    {
        switch (kind) {
        case Kind::density: return "density";
        case Kind::hartree_fock: return "hartree-fock";
        case Kind::value: return format_double(value);
        }
        return "";
    }
};

inline OmegaE parse_omega_e(const std::string& text)
{
    if (text == "density") {
        return {OmegaE::Kind::density, 0.0};
    }
    if (text == "hartree-fock" || text == "hf") {
        return {OmegaE::Kind::hartree_fock, 0.0};
    }
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size() || !(v > 0.0)) {
            throw domain_error("");
        }
        return {OmegaE::Kind::value, v};
    } catch (const std::exception&) {
        throw domain_error("--omega-e expects density, hartree-fock or a positive number, got '" + text + "'");
    }
}

// Two columns (t, F), separated by commas or whitespace; '#' starts a comment.
inline Tabulated read_drive_table(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw domain_error("cannot open drive table '" + path + "'");
    }
    std::vector<std::pair<double, double>> samples;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        double t = 0.0, f = 0.0;
        if (!(ss >> t)) {
            continue;
        }
        if (!(ss >> f)) {
            throw domain_error("drive table line " + std::to_string(lineno) + " has no F value");
        }
        samples.emplace_back(t, f);
    }
    return Tabulated(std::move(samples));
}

inline DriveProfile parse_drive(const std::string& text, double beta)
{
    if (text == "exp") {
        return ExponentialSwitch{beta};
    }
    if (text == "quench") {
        return TotalQuench{};
    }
    if (text == "none") {
        return NoDrive{};
    }
    if (text.rfind("table:", 0) == 0) {
        return read_drive_table(text.substr(6));
    }
    throw domain_error("--drive expects exp, quench, none or table:<path>, got '" + text + "'");
}

struct RunSpec {
    Scenario scenario{Scenario::evolve};
    ModelConfig config{1.0, 1.0, 1.0, 0.4, 0.2, ExponentialSwitch{1.0}};
    std::string drive_text{"exp"};
    double beta{1.0};
    double t_max{20.0};
    double dt{0.01};
    OutputFormat format{OutputFormat::csv};
    std::string out_path; // empty: standard output
    std::vector<double> q_orders{0.5, 2.0};
    OmegaE omega_e{};
    ScaleSource scale_source{ScaleSource::automatic};
    double tol{1e-9};
    std::size_t l_max{10};

    CollisionParams collision{};
    double v_min{1e-3};
    double v_max{1e1};
    std::size_t v_points{41};

    std::vector<double> sweep_lambdas{-2.0, -0.75, 0.0, 0.3, 0.4};
    std::vector<double> sweep_betas{0.25, 0.5, 1.0, 2.0, 5.0, 10.0};
    std::size_t workers{0}; // 0: hardware concurrency
};

inline std::string_view to_string(ScaleSource s)
{
    switch (s) {
    case ScaleSource::automatic: return "auto";
    case ScaleSource::closed_form: return "closed";
    case ScaleSource::numerical: return "numeric";
    }
    return "auto";
}

inline ScaleSource parse_scale_source(const std::string& text)
{
    if (text == "auto") return ScaleSource::automatic;
    if (text == "closed") return ScaleSource::closed_form;
    if (text == "numeric") return ScaleSource::numerical;
    throw domain_error("--scale-source expects auto, closed or numeric, got '" + text + "'");
}

inline std::string join(const std::vector<double>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + format_short(v[i]);
    }
    return s;
}

inline void validate(const RunSpec& spec)
{
    if (!(spec.t_max > 0.0)) {
        throw domain_error("t-max must be positive");
    }
    if (!(spec.dt > 0.0)) {
        throw domain_error("dt must be positive");
    }
    if (spec.dt > spec.t_max) {
        throw domain_error("dt must not exceed t-max");
    }
    for (double q : spec.q_orders) {
        if (!(q > 0.0)) {
            throw domain_error("Renyi orders must be positive");
        }
    }
    switch (spec.scenario) {
    case Scenario::figure1:
    case Scenario::figure2:
    case Scenario::sweep:
        // these pick their own couplings and rates
        if (!(spec.config.omega0 > 0.0)) {
            throw domain_error("omega0 must be positive");
        }
        break;
    case Scenario::collision:
        validate(spec.collision);
        if (!(spec.v_min > 0.0 && spec.v_max > spec.v_min) || spec.v_points < 2) {
            throw domain_error("collision scan needs 0 < v-min < v-max and v-points >= 2");
        }
        break;
    case Scenario::quench: {
        ModelConfig c = spec.config;
        c.drive = TotalQuench{};
        validate(c);
        break;
    }
    default:
        validate(spec.config);
    }
}

namespace detail {

inline void echo(FigureSeries& s, const RunSpec& spec)
{
    const auto& c = spec.config;
    s.set_meta("version", std::string(version));
    s.set_meta("scenario", std::string(to_string(spec.scenario)));
    s.set_meta("hbar", format_double(c.hbar));
    s.set_meta("mass", format_double(c.mass));
    s.set_meta("omega0", format_double(c.omega0));
    s.set_meta("lambda", format_double(c.lambda));
    s.set_meta("q", format_double(c.q_strength));
    s.set_meta("beta", format_double(spec.beta));
    s.set_meta("drive", spec.drive_text);
    s.set_meta("t_max", format_double(spec.t_max));
    s.set_meta("dt", format_double(spec.dt));
    s.set_meta("q_orders", join(spec.q_orders));
    s.set_meta("omega_e", spec.omega_e.describe());
    s.set_meta("scale_source", std::string(to_string(spec.scale_source)));
    s.set_meta("tol", format_double(spec.tol));
    s.set_meta("sign_convention", "Omega_i^2(t) = omega_i^2 - Q F(t)");
}

inline ModePair<ScaleState> at(const ModeTrajectories& traj, std::size_t k)
{
    return {traj.states[0][k], traj.states[1][k]};
}

inline ErmakovOptions options_of(const RunSpec& spec)
{
    ErmakovOptions o;
    o.rel_tol = spec.tol;
    return o;
}

inline FigureSeries run_modes(const RunSpec& spec)
{
    FigureSeries s;
    const auto& c = spec.config;
    const NormalModes modes = normal_modes(c);
    const OneMatrixParams p = one_matrix_params({ScaleState{}, ScaleState{}}, modes);
    const MehlerVariables m = mehler_variables(p);
    s.add_column("omega1", {modes.omega1});
    s.add_column("omega2", {modes.omega2});
    s.add_column("omega_s0", {p.omega_s});
    s.add_column("A0", {p.a_coeff});
    s.add_column("z0", {m.z});
    s.add_column("omega_bar0", {m.omega_bar});
    s.add_column("S_N0", {von_neumann_entropy(m.z)});
    s.add_column("E0", {ground_state_energy(modes, c.hbar)});
    s.add_column("omega_hf", {hartree_fock_frequency(c.omega0, c.lambda)});
    if (c.lambda > 0.0 && c.lambda < 0.5) {
        s.add_column("lambda_dual", {duality_partner(c.lambda)});
    }
    return s;
}

inline FigureSeries run_evolve(const RunSpec& spec, const std::vector<double>& grid)
{
    FigureSeries s;
    const auto traj = evolve_modes(spec.config, grid, spec.scale_source, options_of(spec));
    const Units u = spec.config.units();
    auto& t = s.add_column("t", grid);
    std::vector<double> R1, Rd1, R2, Rd2, ws, al, A, z, wb, peak, x2;
    for (std::size_t k = 0; k < t.size(); ++k) {
        const auto st = at(traj, k);
        const auto p = one_matrix_params(st, traj.modes);
        const auto m = mehler_variables(p);
        R1.push_back(st[0].R);
        Rd1.push_back(st[0].Rdot);
        R2.push_back(st[1].R);
        Rd2.push_back(st[1].Rdot);
        ws.push_back(p.omega_s);
        al.push_back(p.alpha);
        A.push_back(p.a_coeff);
        z.push_back(m.z);
        wb.push_back(m.omega_bar);
        peak.push_back(density(p, 0.0, u));
        x2.push_back(u.hbar / (2.0 * u.mass * p.omega_s));
    }
    s.add_column("R1", R1);
    s.add_column("Rdot1", Rd1);
    s.add_column("R2", R2);
    s.add_column("Rdot2", Rd2);
    s.add_column("omega_s", ws);
    s.add_column("alpha", al);
    s.add_column("A", A);
    s.add_column("z", z);
    s.add_column("omega_bar", wb);
    s.add_column("n_peak", peak);
    s.add_column("x2_moment", x2);
    return s;
}

inline FigureSeries run_energy(const RunSpec& spec, const std::vector<double>& grid)
{
    FigureSeries s;
    const auto& c = spec.config;
    const auto traj = evolve_modes(c, grid, spec.scale_source, options_of(spec));
    const auto w = traj.modes.frequencies();
    s.add_column("t", grid);
    std::vector<double> kin, pot, tot, dtot, d1, d2, ov;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto rep = energy_report(at(traj, k), traj.modes, c.hbar);
        kin.push_back(rep.kinetic);
        pot.push_back(rep.potential);
        tot.push_back(rep.total);
        dtot.push_back(rep.delta_total);
        d1.push_back(rep.per_mode_delta[0]);
        d2.push_back(rep.per_mode_delta[1]);
        ov.push_back(overlap(rep.per_mode_delta, traj.modes, c.hbar));
    }
    s.add_column("kinetic", kin);
    s.add_column("potential", pot);
    s.add_column("total", tot);
    s.add_column("delta_total", dtot);
    s.add_column("delta_1", d1);
    s.add_column("delta_2", d2);
    s.add_column("overlap", ov);

    if (std::holds_alternative<TotalQuench>(c.drive)) {
        return s;
    }
    const ModePair<std::vector<LinearizedState>> lin{solve_linearized(w[0], c.q_strength, c.drive, grid),
                                                     solve_linearized(w[1], c.q_strength, c.drive, grid)};
    std::vector<double> dlin, rate, ovlin;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto rep = delta_energy_linearized({lin[0][k], lin[1][k]}, traj.modes, c.hbar);
        const double F = drive_value(c.drive, grid[k]);
        dlin.push_back(rep.delta_total);
        rate.push_back(energy_rate(lin[0][k], w[0], c.q_strength, F, c.hbar)
                       + energy_rate(lin[1][k], w[1], c.q_strength, F, c.hbar));
        ovlin.push_back(overlap(rep.per_mode_delta, traj.modes, c.hbar));
    }
    s.add_column("delta_linearized", dlin);
    s.add_column("rate", rate);
    s.add_column("overlap_linearized", ovlin);

    if (const auto* e = std::get_if<ExponentialSwitch>(&c.drive)) {
        const ModePair<double> inf{delta_e_exponential_asymptotic(w[0], c.q_strength, e->beta, c.hbar),
                                   delta_e_exponential_asymptotic(w[1], c.q_strength, e->beta, c.hbar)};
        s.set_meta("delta_e_asymptotic", format_double(inf[0] + inf[1]));
        s.set_meta("overlap_asymptotic", format_double(overlap(inf, traj.modes, c.hbar)));
    }
    return s;
}

inline FigureSeries run_entropy(const RunSpec& spec, const std::vector<double>& grid)
{
    FigureSeries s;
    const auto samples = entropy_trajectory(spec.config, grid, spec.q_orders, spec.scale_source);
    std::vector<double> z, sn;
    std::vector<std::vector<double>> sr(spec.q_orders.size());
    for (const auto& e : samples) {
        z.push_back(e.z);
        sn.push_back(e.s_von_neumann);
        for (std::size_t i = 0; i < spec.q_orders.size(); ++i) {
            sr[i].push_back(e.s_renyi.at(spec.q_orders[i]));
        }
    }
    s.add_column("t", grid);
    s.add_column("z", z);
    s.add_column("S_N", sn);
    for (std::size_t i = 0; i < spec.q_orders.size(); ++i) {
        s.add_column("S_R_q" + format_short(spec.q_orders[i]), sr[i]);
    }
    return s;
}

inline FigureSeries run_onematrix(const RunSpec& spec, const std::vector<double>& grid)
{
    FigureSeries s;
    const auto traj = evolve_modes(spec.config, grid, spec.scale_source, options_of(spec));
    std::vector<double> ws, wsd, wsdd, al, A, vfull, vad;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto st = at(traj, k);
        const auto p = one_matrix_params(st, traj.modes);
        const auto kin = omega_s_kinematics(st, {traj.accelerations[0][k], traj.accelerations[1][k]}, traj.modes);
        // coefficients of x^2
        const auto v = effective_potential(kin, 1.0, spec.config.units());
        ws.push_back(p.omega_s);
        wsd.push_back(kin.rate);
        wsdd.push_back(kin.accel);
        al.push_back(p.alpha);
        A.push_back(p.a_coeff);
        vfull.push_back(v.full);
        vad.push_back(v.adiabatic);
    }
    s.add_column("t", grid);
    s.add_column("omega_s", ws);
    s.add_column("omega_s_rate", wsd);
    s.add_column("omega_s_accel", wsdd);
    s.add_column("alpha", al);
    s.add_column("A", A);
    s.add_column("vs_coeff", vfull);
    s.add_column("vs_adiabatic_coeff", vad);
    return s;
}

inline FigureSeries run_spectral(const RunSpec& spec, const std::vector<double>& grid)
{
    FigureSeries s;
    const auto traj = evolve_modes(spec.config, grid, spec.scale_source, options_of(spec));
    std::vector<double> z, wb, pur;
    std::vector<std::vector<double>> P(spec.l_max + 1);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto m = mehler_variables(one_matrix_params(at(traj, k), traj.modes));
        z.push_back(m.z);
        wb.push_back(m.omega_bar);
        pur.push_back(purity(m.z));
        const auto occ = occupations(m, spec.l_max);
        for (std::size_t l = 0; l <= spec.l_max; ++l) {
            P[l].push_back(occ.p[l]);
        }
    }
    s.add_column("t", grid);
    s.add_column("z", z);
    s.add_column("omega_bar", wb);
    s.add_column("purity", pur);
    for (std::size_t l = 0; l <= spec.l_max; ++l) {
        s.add_column("P_" + std::to_string(l), P[l]);
    }
    return s;
}

inline FigureSeries run_quench(const RunSpec& spec, const std::vector<double>& grid)
{
    RunSpec q = spec;
    q.config.drive = TotalQuench{};
    FigureSeries s;
    const auto traj = evolve_modes(q.config, grid, q.scale_source, options_of(q));
    std::vector<double> R1, R2, kin, z, sn, ratio;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto st = at(traj, k);
        const auto p = one_matrix_params(st, traj.modes);
        const auto m = mehler_variables(p);
        R1.push_back(st[0].R);
        R2.push_back(st[1].R);
        kin.push_back(kinetic_energy(st, traj.modes, q.config.hbar));
        z.push_back(m.z);
        sn.push_back(von_neumann_entropy(m.z));
        ratio.push_back(p.a_coeff > 0.0 ? p.omega_s / p.a_coeff : INFINITY);
    }
    s.add_column("t", grid);
    s.add_column("R1", R1);
    s.add_column("R2", R2);
    s.add_column("kinetic", kin);
    s.add_column("z", z);
    s.add_column("S_N", sn);
    s.add_column("omega_s_over_A", ratio);
    return s;
}

inline FigureSeries run_collision(const RunSpec& spec)
{
    FigureSeries s;
    const auto modes = normal_modes(spec.config);
    std::vector<double> v, c, T, alpha, beta, dE;
    const double lo = std::log(spec.v_min), hi = std::log(spec.v_max);
    for (std::size_t i = 0; i < spec.v_points; ++i) {
        CollisionParams p = spec.collision;
        p.v = std::exp(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(spec.v_points - 1));
        const double b = beta_of_velocity(p);
        v.push_back(p.v);
        c.push_back(p.c());
        T.push_back(collision_time(p));
        alpha.push_back(fitted_alpha(p));
        beta.push_back(b);
        dE.push_back(delta_e_exponential_asymptotic(modes.omega1, spec.config.q_strength, b, spec.config.hbar)
                     + delta_e_exponential_asymptotic(modes.omega2, spec.config.q_strength, b, spec.config.hbar));
    }
    s.add_column("v", v);
    s.add_column("c", c);
    s.add_column("T", T);
    s.add_column("alpha_star", alpha);
    s.add_column("beta", beta);
    s.add_column("delta_e_asymptotic", dE);
    const auto& p = spec.collision;
    s.set_meta("z1", format_double(p.z1));
    s.set_meta("z2", format_double(p.z2));
    s.set_meta("e_sq", format_double(p.e_sq));
    s.set_meta("m1", format_double(p.m1));
    s.set_meta("b", format_double(p.b));
    s.set_meta("r_range", format_double(p.r_range));
    s.set_meta("v_min", format_double(spec.v_min));
    s.set_meta("v_max", format_double(spec.v_max));
    s.set_meta("v_points", std::to_string(spec.v_points));
    return s;
}

inline std::string tag(double lambda, double beta)
{
    return "L" + format_short(lambda) + "_b" + format_short(beta);
}

inline constexpr double figure1_lambdas[] = {0.4, -2.0};
inline constexpr double figure1_betas[] = {0.25, 0.5, 1.0};
inline constexpr double figure2_lambdas[] = {0.3, -0.75};
inline constexpr double figure2_betas[] = {2.0, 5.0, 10.0};

inline FigureSeries run_figure1(const RunSpec& spec, const std::vector<double>& grid)
{
    FigureSeries s;
    s.add_column("t", grid);
    const double Q = spec.config.q_strength;
    for (double lambda : figure1_lambdas) {
        const auto modes = normal_modes(spec.config.omega0, lambda);
        const double we = spec.omega_e.resolve(spec.config.omega0, lambda);
        for (double beta : figure1_betas) {
            std::vector<double> ratio;
            ratio.reserve(grid.size());
            for (double t : grid) {
                ratio.push_back(energy_ratio(modes, we, Q, beta, t));
            }
            s.add_column("ratio_" + tag(lambda, beta), std::move(ratio));
            s.set_meta("ratio_inf_" + tag(lambda, beta), format_double(energy_ratio_asymptotic(modes, we, Q, beta)));
        }
        s.set_meta("omega_e_L" + format_short(lambda), format_double(we));
    }
    return s;
}

inline FigureSeries run_figure2(const RunSpec& spec, const std::vector<double>& grid)
{
    FigureSeries s;
    s.add_column("t", grid);
    for (double lambda : figure2_lambdas) {
        for (double beta : figure2_betas) {
            ModelConfig c = spec.config;
            c.lambda = lambda;
            c.drive = ExponentialSwitch{beta};
            const auto samples = entropy_trajectory(c, grid, {}, spec.scale_source);
            std::vector<double> sn;
            sn.reserve(samples.size());
            for (const auto& e : samples) {
                sn.push_back(e.s_von_neumann);
            }
            s.add_column("S_N_" + tag(lambda, beta), std::move(sn));
        }
    }
    return s;
}

struct SweepRow {
    double lambda, beta, omega1, omega2, z0, s_n0, delta_e, delta_e_indep, ratio, overlap;
};

inline SweepRow sweep_point(const RunSpec& spec, double lambda, double beta)
{
    ModelConfig c = spec.config;
    c.lambda = lambda;
    c.drive = ExponentialSwitch{beta};
    validate(c);
    const auto modes = normal_modes(c);
    const double Q = c.q_strength;
    const auto m = mehler_variables(one_matrix_params({ScaleState{}, ScaleState{}}, modes));
    const ModePair<double> inf{delta_e_exponential_asymptotic(modes.omega1, Q, beta, c.hbar),
                               delta_e_exponential_asymptotic(modes.omega2, Q, beta, c.hbar)};
    const double we = spec.omega_e.resolve(c.omega0, lambda);
    const double indep = 2.0 * delta_e_exponential_asymptotic(we, Q, beta, c.hbar);
    return {lambda, beta, modes.omega1, modes.omega2, m.z, von_neumann_entropy(m.z),
            inf[0] + inf[1], indep, indep / (inf[0] + inf[1]), overlap(inf, modes, c.hbar)};
}

// Points are claimed from an atomic counter by a pool of workers; results
// land at their precomputed index, so row order never depends on timing.
inline FigureSeries run_sweep(const RunSpec& spec)
{
    std::vector<double> lambdas = spec.sweep_lambdas;
    std::vector<double> betas = spec.sweep_betas;
    std::sort(lambdas.begin(), lambdas.end());
    std::sort(betas.begin(), betas.end());
    std::vector<std::pair<double, double>> points;
    for (double l : lambdas) {
        for (double b : betas) {
            points.emplace_back(l, b);
        }
    }
    std::vector<SweepRow> rows(points.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            try {
                rows[i] = sweep_point(spec, points[i].first, points[i].second);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    std::size_t n_workers = spec.workers ? spec.workers : std::max(1u, std::thread::hardware_concurrency());
    n_workers = std::min(n_workers, std::max<std::size_t>(1, points.size()));
    {
        std::vector<std::jthread> pool;
        for (std::size_t i = 1; i < n_workers; ++i) {
            pool.emplace_back(work);
        }
        work();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    FigureSeries s;
    auto col = [&](const char* name, double SweepRow::*field) {
        std::vector<double> v;
        for (const auto& r : rows) {
            v.push_back(r.*field);
        }
        s.add_column(name, std::move(v));
    };
    col("lambda", &SweepRow::lambda);
    col("beta", &SweepRow::beta);
    col("omega1", &SweepRow::omega1);
    col("omega2", &SweepRow::omega2);
    col("z0", &SweepRow::z0);
    col("S_N0", &SweepRow::s_n0);
    col("delta_e_asymptotic", &SweepRow::delta_e);
    col("delta_e_independent", &SweepRow::delta_e_indep);
    col("ratio_asymptotic", &SweepRow::ratio);
    col("overlap_asymptotic", &SweepRow::overlap);
    s.set_meta("sweep_lambdas", join(lambdas));
    s.set_meta("sweep_betas", join(betas));
    return s;
}

} // namespace detail

inline FigureSeries run(const RunSpec& spec)
{
    validate(spec);
    const std::vector<double> grid = uniform_grid(spec.t_max, spec.dt);
    FigureSeries s;
    switch (spec.scenario) {
    case Scenario::modes: s = detail::run_modes(spec); break;
    case Scenario::evolve: s = detail::run_evolve(spec, grid); break;
    case Scenario::energy: s = detail::run_energy(spec, grid); break;
    case Scenario::entropy: s = detail::run_entropy(spec, grid); break;
    case Scenario::onematrix: s = detail::run_onematrix(spec, grid); break;
    case Scenario::spectral: s = detail::run_spectral(spec, grid); break;
    case Scenario::quench: s = detail::run_quench(spec, grid); break;
    case Scenario::collision: s = detail::run_collision(spec); break;
    case Scenario::figure1: s = detail::run_figure1(spec, grid); break;
    case Scenario::figure2: s = detail::run_figure2(spec, grid); break;
    case Scenario::sweep: s = detail::run_sweep(spec); break;
    }
    s.label = std::string(to_string(spec.scenario));
    auto own = std::move(s.metadata);
    s.metadata.clear();
    detail::echo(s, spec);
    for (auto& [k, v] : own) {
        s.set_meta(std::move(k), std::move(v));
    }
    return s;
}

inline void write(std::ostream& os, const FigureSeries& s, OutputFormat format)
{
    if (format == OutputFormat::json) {
        write_json(os, s);
    } else {
        write_csv(os, s);
    }
}

} // namespace harmonium
