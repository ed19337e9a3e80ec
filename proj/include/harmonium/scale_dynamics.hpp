// scale_dynamics.hpp: scale factor R(t) of a harmonic mode with
// time-dependent frequency
//
// A Gaussian mode state keeps its form under a time-dependent frequency
// Omega(t); its width is set by the scale R(t), which obeys
//
//     R'' + Omega^2(t) R = omega^2 / R^3,   R(0) = 1,  R'(0) = 0,
//
// with phase gamma' = omega / R^2. Closed forms exist for the exponential
// switch (to linear order in Q) and for the total quench; everything else goes
// through the adaptive integrator.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/numeric/odeint.hpp>

#include "harmonium/errors.hpp"
#include "harmonium/model.hpp"

namespace harmonium {

struct ScaleState {
    double R{1.0};
    double Rdot{0.0};
    double gamma{0.0};
};

struct ScaleTrajectory {
    std::vector<double> times;
    std::vector<ScaleState> states;
    double mode_frequency{1.0};
};

// r = R - 1 and its rate in the linear-response regime (|r| << 1).
struct LinearizedState {
    double r{0.0};
    double rdot{0.0};
};

struct ErmakovOptions {
    double rel_tol{1e-9};
    double abs_tol{1e-12};
    double r_floor{1e-6};
    double min_step{1e-13};
    std::size_t max_steps{50'000'000};
};

namespace detail {

inline void check_grid(std::span<const double> grid)
{
    if (grid.empty()) {
        throw domain_error("time grid is empty");
    }
    if (grid.front() != 0.0) {
        throw domain_error("time grid must start at t=0, starts at " + detail::num(grid.front()));
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw domain_error("time grid must be strictly increasing (index " + std::to_string(i)
                               + ")");
        }
    }
}

} // namespace detail

inline std::vector<double> uniform_grid(double t_max, double dt)
{
    if (!(t_max > 0.0) || !(dt > 0.0)) {
        throw domain_error("uniform grid needs t_max > 0 and dt > 0");
    }
    const auto n = static_cast<std::size_t>(std::llround(t_max / dt));
    std::vector<double> grid(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        grid[i] = static_cast<double>(i) * dt;
    }
    grid.back() = std::max(grid.back(), t_max);
    if (n > 0 && grid[n] <= grid[n - 1]) {
        grid.pop_back();
    }
    return grid;
}

// Integrates the nonlinear scale equation on `grid` with an embedded
// Dormand-Prince 5(4) pair. Grid times are hit exactly (no dense-output
// extrapolation past the last requested time), so omega_sq is never evaluated
// outside [grid.front(), grid.back()].
inline ScaleTrajectory solve_ermakov(double omega,
                                     const std::function<double(double)>& omega_sq,
                                     std::span<const double> grid,
                                     const ErmakovOptions& options = {})
{
    namespace odeint = boost::numeric::odeint;
    using State = std::array<double, 3>;

    if (!(omega > 0.0)) {
        throw domain_error("mode frequency must be positive");
    }
    if (!(options.rel_tol > 0.0)) {
        throw domain_error("integrator tolerance must be positive");
    }
    detail::check_grid(grid);

    const double w2 = omega * omega;
    auto rhs = [&](const State& y, State& dy, double t) {
        const double R = y[0];
        dy[0] = y[1];
        dy[1] = w2 / (R * R * R) - omega_sq(t) * R;
        dy[2] = omega / (R * R);
    };

    auto stepper = odeint::make_controlled(options.abs_tol, options.rel_tol,
                                           odeint::runge_kutta_dopri5<State>());

    ScaleTrajectory out;
    out.mode_frequency = omega;
    out.times.assign(grid.begin(), grid.end());
    out.states.reserve(grid.size());
    out.states.push_back({1.0, 0.0, 0.0});

    State y{1.0, 0.0, 0.0};
    double t = 0.0;
    double dt = std::min(1e-3 / omega, grid.size() > 1 ? grid[1] : 1.0);
    std::size_t steps = 0;

    for (std::size_t k = 1; k < grid.size(); ++k) {
        const double target = grid[k];
        while (t < target) {
            const bool clipped = dt >= target - t;
            double h = clipped ? target - t : dt;
            const auto result = stepper.try_step(rhs, y, t, h);
            if (++steps > options.max_steps) {
                throw stiffness_error("scale integration exceeded " + std::to_string(options.max_steps)
                                      + " steps near t=" + detail::num(t));
            }
            if (result == odeint::fail) {
                if (h < options.min_step * std::max(1.0, std::abs(t))) {
                    throw stiffness_error("step size underflow (h=" + detail::num(h)
                                          + ") in scale integration at t=" + detail::num(t));
                }
                dt = h;
                continue;
            }
            if (clipped) {
                t = target;
            }
            // keep the controller's suggestion unless the step was shortened to land on the grid
            if (!clipped || h > dt) {
                dt = h;
            }
            if (!(y[0] >= options.r_floor)) {
                throw singularity_error("scale factor R=" + detail::num(y[0])
                                        + " fell below the floor "
                                        + detail::num(options.r_floor) + " at t="
                                        + detail::num(t));
            }
        }
        out.states.push_back({y[0], y[1], y[2]});
    }
    return out;
}

inline ScaleTrajectory solve_ermakov(double omega, const std::function<double(double)>& omega_sq,
                                     std::span<const double> grid, double tol)
{
    ErmakovOptions options;
    options.rel_tol = tol;
    return solve_ermakov(omega, omega_sq, grid, options);
}

// Closed-form linear response to F(t) = Theta(t) exp(-beta t):
//   R = 1 + Q/(beta^2 + (2w)^2) [e^{-beta t} - cos 2wt + (beta/2w) sin 2wt]
// The phase is integrated to the same (first) order in Q.
inline ScaleState linear_response_exponential(double omega, double Q, double beta, double t)
{
    if (!(omega > 0.0) || !(beta > 0.0)) {
        throw domain_error("linear response needs omega > 0 and beta > 0");
    }
    if (t < 0.0) {
        throw domain_error("linear response is defined for t >= 0");
    }
    const double nu = 2.0 * omega;
    const double amp = Q / (beta * beta + nu * nu);
    const double e = std::exp(-beta * t);
    const double c = std::cos(nu * t);
    const double s = std::sin(nu * t);

    ScaleState st;
    st.R = 1.0 + amp * (e - c + beta / nu * s);
    st.Rdot = amp * (-beta * e + nu * s + beta * c);
    const double r_integral = amp * (-std::expm1(-beta * t) / beta - s / nu + beta / (nu * nu) * (1.0 - c));
    st.gamma = omega * t - 2.0 * omega * r_integral;
    return st;
}

// Second derivative of the closed form above; equals Q F(t) - (2w)^2 r.
inline double linear_response_exponential_acceleration(double omega, double Q, double beta, double t)
{
    const double nu = 2.0 * omega;
    const double amp = Q / (beta * beta + nu * nu);
    return amp * (beta * beta * std::exp(-beta * t) + nu * nu * std::cos(nu * t)
                  - nu * beta * std::sin(nu * t));
}

// Solves r'' + (2w)^2 r = Q F(t), r(0) = r'(0) = 0, through
// w = r' + i (2w) r, which obeys w' - i(2w) w = Q F(t). Each step propagates
// the homogeneous part exactly and integrates the forcing convolution with
// Gauss-Legendre nodes on sub-steps of at most 0.5 rad of breathing phase.
inline std::vector<LinearizedState> solve_linearized(double omega, double Q, const DriveProfile& drive,
                                                     std::span<const double> grid)
{
    if (!(omega > 0.0)) {
        throw domain_error("mode frequency must be positive");
    }
    if (std::holds_alternative<TotalQuench>(drive)) {
        throw domain_error("a total quench is not a weak drive; use quench_solution");
    }
    validate(drive);
    detail::check_grid(grid);

    using boost::math::quadrature::gauss;
    using cplx = std::complex<double>;
    const double nu = 2.0 * omega;
    const double max_sub = 0.5 / nu;

    std::vector<LinearizedState> out;
    out.reserve(grid.size());
    out.push_back({0.0, 0.0});

    cplx w{0.0, 0.0};
    const bool silent = std::holds_alternative<NoDrive>(drive);
    for (std::size_t k = 1; k < grid.size(); ++k) {
        const double t0 = grid[k - 1];
        const double span = grid[k] - t0;
        const auto pieces = static_cast<std::size_t>(std::ceil(span / max_sub));
        const double h = span / static_cast<double>(pieces);
        for (std::size_t p = 0; p < pieces; ++p) {
            const double a = t0 + static_cast<double>(p) * h;
            const double b = (p + 1 == pieces) ? grid[k] : a + h;
            const double hh = b - a;
            w *= std::polar(1.0, nu * hh);
            if (!silent) {
                auto re = [&](double s) { return std::cos(nu * (b - s)) * drive_value(drive, s); };
                auto im = [&](double s) { return std::sin(nu * (b - s)) * drive_value(drive, s); };
                w += Q * cplx{gauss<double, 10>::integrate(re, a, b), gauss<double, 10>::integrate(im, a, b)};
            }
        }
        out.push_back({w.imag() / nu, w.real()});
    }
    return out;
}

// Free dilation after all potentials are switched off at t = 0.
inline ScaleState quench_solution(double omega, double t)
{
    if (t < 0.0) {
        throw domain_error("quench solution is defined for t >= 0");
    }
    const double R = std::sqrt(1.0 + omega * omega * t * t);
    return {R, t * omega * omega / R, std::atan(omega * t)};
}

inline double mode_frequency_of_t(const ScaleState& state, double omega)
{
    if (!(state.R > 0.0)) {
        throw domain_error("scale factor must be positive");
    }
    return omega / (state.R * state.R);
}

inline double scale_acceleration(const ScaleState& state, double omega, double omega_sq_now)
{
    if (!(state.R > 0.0)) {
        throw domain_error("scale factor must be positive");
    }
    const double R = state.R;
    return omega * omega / (R * R * R) - omega_sq_now * R;
}

// Where the per-mode scale states come from when composing higher-level
// quantities. `automatic` uses closed forms for the exponential switch, the
// quench and the undriven model, and the integrator for tabulated drives.
enum class ScaleSource { automatic, closed_form, numerical };

struct ModeTrajectories {
    std::vector<double> times;
    NormalModes modes;
    ModePair<std::vector<ScaleState>> states;
    // R'' consistent with the source: the linearized equation for the
    // closed-form exponential response, the scale equation otherwise.
    ModePair<std::vector<double>> accelerations;
};

inline ModeTrajectories evolve_modes(const ModelConfig& config, std::span<const double> grid,
                                     ScaleSource source = ScaleSource::automatic,
                                     const ErmakovOptions& options = {})
{
    validate(config);
    detail::check_grid(grid);

    const NormalModes modes = normal_modes(config);
    const auto freqs = modes.frequencies();
    const bool tabulated = std::holds_alternative<Tabulated>(config.drive);
    if (source == ScaleSource::closed_form && tabulated) {
        throw domain_error("no closed form exists for a tabulated drive");
    }
    const bool numeric = source == ScaleSource::numerical
                         || (source == ScaleSource::automatic && tabulated);

    ModeTrajectories out;
    out.times.assign(grid.begin(), grid.end());
    out.modes = modes;

    for (std::size_t i = 0; i < 2; ++i) {
        const double w = freqs[i];
        auto& states = out.states[i];
        auto& acc = out.accelerations[i];
        states.reserve(grid.size());
        acc.reserve(grid.size());

        if (numeric) {
            auto omega_sq = [&config, w](double t) { return driven_omega_sq(config, w, t); };
            auto traj = solve_ermakov(w, omega_sq, grid, options);
            states = std::move(traj.states);
            for (std::size_t k = 0; k < grid.size(); ++k) {
                acc.push_back(scale_acceleration(states[k], w, omega_sq(grid[k])));
            }
            continue;
        }

        for (double t : grid) {
            if (const auto* e = std::get_if<ExponentialSwitch>(&config.drive)) {
                states.push_back(linear_response_exponential(w, config.q_strength, e->beta, t));
                acc.push_back(linear_response_exponential_acceleration(w, config.q_strength, e->beta, t));
            } else if (std::holds_alternative<TotalQuench>(config.drive)) {
                states.push_back(quench_solution(w, t));
                acc.push_back(scale_acceleration(states.back(), w, 0.0));
            } else {
                states.push_back({1.0, 0.0, w * t});
                acc.push_back(0.0);
            }
        }
    }
    return out;
}

} // namespace harmonium
