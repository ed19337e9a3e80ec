// one_matrix.hpp: reduced one-particle density matrix of the driven state
//
// Tracing one particle out of the two-mode Gaussian gives
//
//   G1(x1, x2, t) = phi_s(x1) conj(phi_s(x2)) exp(-(m/2hbar) A (x1 - x2)^2),
//   phi_s(x)      = (m ws/(hbar pi))^{1/4} exp(-(m/2hbar)(ws - i alpha) x^2),
//
// with omega_i(t) = omega_i / R_i^2 and
//   ws    = 2 w1(t) w2(t) / (w1(t) + w2(t)),
//   alpha = (ws/2) (R1 R1'/omega1 + R2 R2'/omega2),
//   A     = ((w1(t) - w2(t))^2 + (R1'/R1 - R2'/R2)^2) / (4 (w1(t) + w2(t))).
//
// The density is the diagonal, and the current follows from the phase of
// phi_s: j = (hbar/m) n d/dx[(m/2hbar) alpha x^2] = alpha x n. Since
// alpha = -ws'/(2 ws), this j satisfies dn/dt + dj/dx = 0.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "harmonium/hermite.hpp"
#include "harmonium/model.hpp"
#include "harmonium/scale_dynamics.hpp"

namespace harmonium {

struct OneMatrixParams {
    double omega_s{1.0};
    double alpha{0.0};
    double a_coeff{0.0};
};

inline OneMatrixParams one_matrix_params(const ModePair<ScaleState>& states, const NormalModes& modes)
{
    const auto w = modes.frequencies();
    const double w1 = mode_frequency_of_t(states[0], w[0]);
    const double w2 = mode_frequency_of_t(states[1], w[1]);
    const double k1 = states[0].Rdot / states[0].R;
    const double k2 = states[1].Rdot / states[1].R;

    OneMatrixParams p;
    p.omega_s = 2.0 * w1 * w2 / (w1 + w2);
    p.alpha = 0.5 * p.omega_s * (states[0].R * states[0].Rdot / w[0] + states[1].R * states[1].Rdot / w[1]);
    p.a_coeff = 0.25 * ((w1 - w2) * (w1 - w2) + (k1 - k2) * (k1 - k2)) / (w1 + w2);
    return p;
}

inline std::complex<double> phi_s(const OneMatrixParams& p, double x, Units u = {})
{
    const double c = u.mass / u.hbar;
    const double norm = std::pow(c * p.omega_s / std::numbers::pi, 0.25);
    return norm * std::exp(std::complex<double>{-0.5 * c * p.omega_s * x * x, 0.5 * c * p.alpha * x * x});
}

inline double density(const OneMatrixParams& p, double x, Units u = {})
{
    const double c = u.mass / u.hbar;
    return std::sqrt(c * p.omega_s / std::numbers::pi) * std::exp(-c * p.omega_s * x * x);
}

// `two_hbar_over_m` multiplies the current by 2 hbar/m; it violates the
// continuity equation and exists only for comparison.
enum class CurrentConvention { phase_gradient, two_hbar_over_m };

inline double current(const OneMatrixParams& p, double x, Units u = {},
                      CurrentConvention convention = CurrentConvention::phase_gradient)
{
    const double j = p.alpha * x * density(p, x, u);
    return convention == CurrentConvention::phase_gradient ? j : 2.0 * u.hbar / u.mass * j;
}

inline std::complex<double> gamma1_eval(const OneMatrixParams& p, double x1, double x2, Units u = {})
{
    const double d = x1 - x2;
    return phi_s(p, x1, u) * std::conj(phi_s(p, x2, u)) * std::exp(-0.5 * u.mass / u.hbar * p.a_coeff * d * d);
}

// Independent-particle state built from phi_s; its one-matrix is gamma1_eval
// with A = 0 and it reproduces the density and current exactly.
inline std::complex<double> auxiliary_product_state(const OneMatrixParams& p, double x1, double x2,
                                                    Units u = {})
{
    return phi_s(p, x1, u) * phi_s(p, x2, u);
}

// Full two-particle state in the original coordinates, a product of mode
// Gaussians in the normal coordinates.
struct TwoParticleState {
    NormalModes modes;
    ModePair<ScaleState> states;
    Units units;
};

inline std::complex<double> mode_wavefunction(double X, double omega, const ScaleState& s, Units u = {})
{
    const double c = u.mass / u.hbar;
    const double R2 = s.R * s.R;
    const double norm = std::pow(c * omega / (R2 * std::numbers::pi), 0.25);
    const std::complex<double> expo{-0.5 * c * X * X * omega / R2, 0.5 * c * X * X * s.Rdot / s.R};
    return norm * std::exp(expo - std::complex<double>{0.0, s.gamma});
}

inline std::complex<double> two_particle_wavefunction(const TwoParticleState& psi, double x1, double x2)
{
    const auto X = to_normal_coordinates(x1, x2);
    return mode_wavefunction(X.X1, psi.modes.omega1, psi.states[0], psi.units)
           * mode_wavefunction(X.X2, psi.modes.omega2, psi.states[1], psi.units);
}

struct QuadratureSpec {
    std::size_t nodes{200};
    // Map from Gauss-Hermite abscissae to x3; 0 selects 1/sqrt(p) where p is
    // the Gaussian precision of the integrand in x3.
    double length_scale{0.0};
    double min_coverage_sigmas{8.0};
};

struct Gamma1Integral {
    std::complex<double> value;
    double coverage_sigmas{0.0};
    bool range_warning{false};
};

// G1(x1, x2) = int dx3 Psi(x1, x3) conj(Psi(x2, x3)), by Gauss-Hermite
// quadrature centred on the real Gaussian envelope of the integrand.
inline Gamma1Integral gamma1_direct_integral(const TwoParticleState& psi, double x1, double x2,
                                             const QuadratureSpec& quad = {})
{
    const auto w = psi.modes.frequencies();
    const double c = psi.units.mass / psi.units.hbar;
    const double v1 = mode_frequency_of_t(psi.states[0], w[0]);
    const double v2 = mode_frequency_of_t(psi.states[1], w[1]);

    const double precision = c * 0.5 * (v1 + v2);
    const double sigma = 1.0 / std::sqrt(2.0 * precision);
    const double centre = -(v1 - v2) * (x1 + x2) / (2.0 * (v1 + v2));
    const double scale = quad.length_scale > 0.0 ? quad.length_scale : 1.0 / std::sqrt(precision);

    const GaussHermiteRule rule = gauss_hermite(quad.nodes);
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const double s = rule.nodes[k];
        const double x3 = centre + scale * s;
        const auto f = two_particle_wavefunction(psi, x1, x3) * std::conj(two_particle_wavefunction(psi, x2, x3));
        sum += rule.weights[k] * std::exp(s * s) * f;
    }

    Gamma1Integral out;
    out.value = scale * sum;
    out.coverage_sigmas = scale * *std::max_element(rule.nodes.begin(), rule.nodes.end()) / sigma;
    out.range_warning = out.coverage_sigmas < quad.min_coverage_sigmas;
    return out;
}

// ws and its first two time derivatives, from 1/ws = (R1^2/w1 + R2^2/w2)/2.
struct OmegaSKinematics {
    double value{1.0};
    double rate{0.0};
    double accel{0.0};
};

inline OmegaSKinematics omega_s_kinematics(const ModePair<ScaleState>& states,
                                           const ModePair<double>& accelerations,
                                           const NormalModes& modes)
{
    const auto w = modes.frequencies();
    double g = 0.0, gd = 0.0, gdd = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& s = states[i];
        g += 0.5 * s.R * s.R / w[i];
        gd += s.R * s.Rdot / w[i];
        gdd += (s.Rdot * s.Rdot + s.R * accelerations[i]) / w[i];
    }
    return {1.0 / g, -gd / (g * g), -gdd / (g * g) + 2.0 * gd * gd / (g * g * g)};
}

struct EffectivePotential {
    double full{0.0};
    double adiabatic{0.0};
};

// sqrt(ws) d^2/dt^2 (1/sqrt(ws)) = (3/4)(ws'/ws)^2 - ws''/(2 ws)
inline double effective_potential_correction(const OmegaSKinematics& k)
{
    const double r = k.rate / k.value;
    return 0.75 * r * r - 0.5 * k.accel / k.value;
}

// Single-particle potential that drives phi_s; the additive time-dependent
// constant (gauge) is fixed to zero.
inline EffectivePotential effective_potential(const OmegaSKinematics& k, double x, Units u = {})
{
    EffectivePotential v;
    v.adiabatic = 0.5 * u.mass * k.value * k.value * x * x;
    v.full = v.adiabatic - 0.5 * u.mass * effective_potential_correction(k) * x * x;
    return v;
}

} // namespace harmonium
