// harmonium: run a scenario of the driven two-particle harmonic model and
// emit its series as CSV or JSON.
//
//   harmonium figure1 --omega-e hartree-fock --out fig1.csv
//   harmonium entropy --lambda 0.3 --beta 2 --q-orders 0.5,2 --format json
//   harmonium sweep --config sweep.ini
//
// Exit status: 0 success, 2 invalid configuration, 3 numerical failure.
// Failures are reported on stderr as one JSON object.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "harmonium/harmonium.hpp"

namespace {

constexpr int exit_config = 2;
constexpr int exit_numerical = 3;

int report(int code, const std::string& kind, const std::string& message)
{
    nlohmann::ordered_json err;
    err["error"] = kind;
    err["message"] = message;
    err["exit_code"] = code;
    std::cerr << err.dump() << '\n';
    return code;
}

// Command line that regenerates the same output.
std::string rerun_command(const harmonium::RunSpec& s, const std::string& omega_e, const std::string& format)
{
    using harmonium::format_double;
    std::string cmd = "harmonium " + std::string(to_string(s.scenario));
    cmd += " --omega0 " + format_double(s.config.omega0);
    cmd += " --lambda " + format_double(s.config.lambda);
    cmd += " --q " + format_double(s.config.q_strength);
    cmd += " --beta " + format_double(s.beta);
    cmd += " --drive " + s.drive_text;
    cmd += " --t-max " + format_double(s.t_max);
    cmd += " --dt " + format_double(s.dt);
    cmd += " --q-orders " + harmonium::join(s.q_orders);
    cmd += " --omega-e " + omega_e;
    cmd += " --scale-source " + std::string(to_string(s.scale_source));
    cmd += " --tol " + format_double(s.tol);
    cmd += " --format " + format;
    if (s.scenario == harmonium::Scenario::spectral) {
        cmd += " --l-max " + std::to_string(s.l_max);
    }
    if (s.scenario == harmonium::Scenario::collision) {
        cmd += " --z1 " + format_double(s.collision.z1) + " --z2 " + format_double(s.collision.z2);
        cmd += " --e-sq " + format_double(s.collision.e_sq) + " --m1 " + format_double(s.collision.m1);
        cmd += " --b " + format_double(s.collision.b) + " --r-range " + format_double(s.collision.r_range);
        cmd += " --v-min " + format_double(s.v_min) + " --v-max " + format_double(s.v_max);
        cmd += " --v-points " + std::to_string(s.v_points);
    }
    if (s.scenario == harmonium::Scenario::sweep) {
        cmd += " --sweep-lambdas " + harmonium::join(s.sweep_lambdas);
        cmd += " --sweep-betas " + harmonium::join(s.sweep_betas);
    }
    return cmd;
}

} // namespace

int main(int argc, char** argv)
{
    harmonium::RunSpec spec;
    std::string scenario = "evolve";
    std::string omega_e = "density";
    std::string format = "csv";
    std::string scale_source = "auto";

    CLI::App app{"Driven two-particle harmonic model: time series and diagnostics"};
    app.set_version_flag("--version", std::string(harmonium::version));
    app.set_config("--config", "", "Flat key = value file; command-line flags take precedence");
    app.config_formatter(std::make_shared<CLI::ConfigINI>());
    app.allow_config_extras(false);

    std::vector<std::string> names;
    for (const auto& [k, n] : harmonium::scenario_names) {
        names.emplace_back(n);
    }
    app.add_option("scenario", scenario, "Scenario to run")->check(CLI::IsMember(names));

    auto& c = spec.config;
    app.add_option("--omega0", c.omega0, "Trap frequency")->capture_default_str();
    app.add_option("--lambda", c.lambda, "Coupling Lambda (< 0.5)")->capture_default_str();
    app.add_option("--q", c.q_strength, "Drive strength Q")->capture_default_str();
    app.add_option("--beta", spec.beta, "Switching rate of the exponential drive")->capture_default_str();
    app.add_option("--drive", spec.drive_text, "exp | quench | none | table:<path>")->capture_default_str();
    app.add_option("--t-max", spec.t_max, "End of the output grid")->capture_default_str();
    app.add_option("--dt", spec.dt, "Output sampling step")->capture_default_str();
    app.add_option("--q-orders", spec.q_orders, "Renyi orders")->delimiter(',')->capture_default_str();
    app.add_option("--omega-e", omega_e, "density | hartree-fock | <value>")->capture_default_str();
    app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--out", spec.out_path, "Output file (default: stdout)");
    app.add_option("--scale-source", scale_source, "auto | closed | numeric")->capture_default_str();
    app.add_option("--tol", spec.tol, "Relative tolerance of the scale-equation integrator")->capture_default_str();
    app.add_option("--l-max", spec.l_max, "Highest natural orbital reported by `spectral`")->capture_default_str();
    app.add_option("--hbar", c.hbar, "Reduced Planck constant")->capture_default_str();
    app.add_option("--mass", c.mass, "Particle mass")->capture_default_str();

    auto& col = spec.collision;
    app.add_option("--z1", col.z1, "Projectile charge")->capture_default_str();
    app.add_option("--z2", col.z2, "Target charge")->capture_default_str();
    app.add_option("--e-sq", col.e_sq, "e^2 in the chosen units")->capture_default_str();
    app.add_option("--m1", col.m1, "Projectile mass")->capture_default_str();
    app.add_option("--b", col.b, "Impact parameter")->capture_default_str();
    app.add_option("--r-range", col.r_range, "Screening range R")->capture_default_str();
    app.add_option("--v-min", spec.v_min, "Lowest projectile velocity")->capture_default_str();
    app.add_option("--v-max", spec.v_max, "Highest projectile velocity")->capture_default_str();
    app.add_option("--v-points", spec.v_points, "Log-spaced velocity samples")->capture_default_str();

    app.add_option("--sweep-lambdas", spec.sweep_lambdas, "Couplings of the sweep grid")->delimiter(',');
    app.add_option("--sweep-betas", spec.sweep_betas, "Switching rates of the sweep grid")->delimiter(',');
    app.add_option("--workers", spec.workers, "Sweep worker threads (0: all cores)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report(exit_config, "config", e.what());
    }

    try {
        spec.scenario = harmonium::parse_scenario(scenario);
        spec.omega_e = harmonium::parse_omega_e(omega_e);
        spec.format = format == "json" ? harmonium::OutputFormat::json : harmonium::OutputFormat::csv;
        spec.scale_source = harmonium::parse_scale_source(scale_source);
        c.drive = harmonium::parse_drive(spec.drive_text, spec.beta);

        harmonium::FigureSeries series = harmonium::run(spec);
        series.set_meta("rerun", rerun_command(spec, omega_e, format));

        if (spec.out_path.empty()) {
            harmonium::write(std::cout, series, spec.format);
        } else {
            std::ofstream out(spec.out_path, std::ios::binary);
            if (!out) {
                return report(exit_config, "config", "cannot open output file '" + spec.out_path + "'");
            }
            harmonium::write(out, series, spec.format);
            if (!out) {
                return report(exit_numerical, "io", "failed writing '" + spec.out_path + "'");
            }
        }
    } catch (const harmonium::numerical_error& e) {
        return report(exit_numerical, "numerical", e.what());
    } catch (const harmonium::domain_error& e) {
        return report(exit_config, "config", e.what());
    } catch (const harmonium::range_error& e) {
        return report(exit_config, "range", e.what());
    } catch (const std::exception& e) {
        return report(exit_numerical, "internal", e.what());
    }
    return 0;
}
