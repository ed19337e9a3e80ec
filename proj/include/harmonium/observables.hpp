// observables.hpp: energies and overlap of the driven two-mode state
//
// Expectation values are taken with the unperturbed Hamiltonian H0; the drive
// term never enters a reported energy.

#pragma once

#include <cmath>
#include <string>

#include "harmonium/errors.hpp"
#include "harmonium/model.hpp"
#include "harmonium/scale_dynamics.hpp"

namespace harmonium {

struct EnergyReport {
    double kinetic{0.0};
    double potential{0.0};
    double total{0.0};
    double delta_total{0.0};
    ModePair<double> per_mode_delta{0.0, 0.0};
};

inline double ground_state_energy(const NormalModes& modes, double hbar = 1.0)
{
    return 0.5 * hbar * (modes.omega1 + modes.omega2);
}

inline double mode_kinetic_energy(const ScaleState& s, double omega, double hbar = 1.0)
{
    return hbar * omega / 4.0 * (1.0 / (s.R * s.R) + s.Rdot * s.Rdot / (omega * omega));
}

inline double mode_potential_energy(const ScaleState& s, double omega, double hbar = 1.0)
{
    return hbar * omega / 4.0 * s.R * s.R;
}

inline double kinetic_energy(const ModePair<ScaleState>& states, const NormalModes& modes,
                             double hbar = 1.0)
{
    const auto w = modes.frequencies();
    return mode_kinetic_energy(states[0], w[0], hbar) + mode_kinetic_energy(states[1], w[1], hbar);
}

inline double potential_energy(const ModePair<ScaleState>& states, const NormalModes& modes,
                               double hbar = 1.0)
{
    const auto w = modes.frequencies();
    return mode_potential_energy(states[0], w[0], hbar) + mode_potential_energy(states[1], w[1], hbar);
}

// Exact energy change K + V - E(0) from the full scale states.
inline EnergyReport energy_report(const ModePair<ScaleState>& states, const NormalModes& modes,
                                  double hbar = 1.0)
{
    const auto w = modes.frequencies();
    EnergyReport rep;
    for (std::size_t i = 0; i < 2; ++i) {
        const double k = mode_kinetic_energy(states[i], w[i], hbar);
        const double v = mode_potential_energy(states[i], w[i], hbar);
        rep.kinetic += k;
        rep.potential += v;
        // (R - 1/R)^2 = R^2 + 1/R^2 - 2 avoids cancellation for R near 1
        const double R = states[i].R;
        const double d = R - 1.0 / R;
        rep.per_mode_delta[i] = hbar * w[i] / 4.0 * (d * d + states[i].Rdot * states[i].Rdot / (w[i] * w[i]));
    }
    rep.total = rep.kinetic + rep.potential;
    rep.delta_total = rep.per_mode_delta[0] + rep.per_mode_delta[1];
    return rep;
}

inline double mode_delta_energy_linearized(const LinearizedState& lin, double omega, double hbar = 1.0)
{
    const double nu = 2.0 * omega;
    return hbar * omega / 4.0 * (nu * nu * lin.r * lin.r + lin.rdot * lin.rdot) / (omega * omega);
}

// Linear-response energy change; the drive-free part of `total`/`kinetic`/
// `potential` is left at zero since only differences are defined at this order.
inline EnergyReport delta_energy_linearized(const ModePair<LinearizedState>& lin,
                                            const NormalModes& modes, double hbar = 1.0)
{
    const auto w = modes.frequencies();
    EnergyReport rep;
    rep.per_mode_delta = {mode_delta_energy_linearized(lin[0], w[0], hbar),
                          mode_delta_energy_linearized(lin[1], w[1], hbar)};
    rep.delta_total = rep.per_mode_delta[0] + rep.per_mode_delta[1];
    return rep;
}

// Per-mode energy change under F(t) = Theta(t) exp(-beta t):
//   dE = (hbar w/4) Q^2/(beta^2 + (2w)^2) / w^2 [1 + e^{-2 beta t} - 2 e^{-beta t} cos 2wt]
// Near t = 0 the bracket is (beta^2 + 4w^2) t^2 + O(t^3), so dE ~ hbar Q^2 t^2/(4w)
// independent of beta (see delta_e_exponential_small_t).
inline double delta_e_exponential(double omega, double Q, double beta, double t, double hbar = 1.0)
{
    if (t < 0.0) {
        throw domain_error("energy change is defined for t >= 0");
    }
    const double nu = 2.0 * omega;
    const double e = std::exp(-beta * t);
    // 1 + e^2 - 2 e cos = (1 - e)^2 + 2 e (1 - cos), both terms non-negative
    const double one_minus_e = -std::expm1(-beta * t);
    const double half = std::sin(0.5 * nu * t);
    const double bracket = one_minus_e * one_minus_e + 4.0 * e * half * half;
    return hbar * omega / 4.0 * Q * Q / (beta * beta + nu * nu) / (omega * omega) * bracket;
}

inline double delta_e_exponential_asymptotic(double omega, double Q, double beta, double hbar = 1.0)
{
    const double nu = 2.0 * omega;
    return hbar * omega / 4.0 * Q * Q / (beta * beta + nu * nu) / (omega * omega);
}

inline double delta_e_exponential_small_t(double omega, double Q, double t, double hbar = 1.0)
{
    return hbar * Q * Q * t * t / (4.0 * omega);
}

// d/dt of the per-mode linearized energy, using r'' + (2w)^2 r = Q F.
inline double energy_rate(const LinearizedState& lin, double omega, double Q, double F_now,
                          double hbar = 1.0)
{
    return hbar * omega / 4.0 * (2.0 * lin.rdot * Q * F_now / (omega * omega));
}

// |<Psi(0)|Psi(t)>|^2 in terms of per-mode energy changes. With exact
// (nonlinear) dE_i this is the exact squared overlap of the Gaussian states.
inline double overlap(const ModePair<double>& delta_e, const NormalModes& modes, double hbar = 1.0)
{
    const auto w = modes.frequencies();
    double o = 1.0;
    for (std::size_t i = 0; i < 2; ++i) {
        if (delta_e[i] < 0.0) {
            throw domain_error("overlap needs non-negative energy changes, got "
                               + detail::num(delta_e[i]));
        }
        o /= std::sqrt(1.0 + delta_e[i] / (hbar * w[i]));
    }
    return o;
}

// Independent-particle model in a fixed trap omega_e: both particles respond
// like one mode of frequency omega_e.
inline double delta_e_independent(double omega_e, double Q, double beta, double t, double hbar = 1.0)
{
    return 2.0 * delta_e_exponential(omega_e, Q, beta, t, hbar);
}

inline double density_optimal_frequency(const NormalModes& modes)
{
    return 2.0 * modes.omega1 * modes.omega2 / (modes.omega1 + modes.omega2);
}

inline double hartree_fock_frequency(double omega0, double lambda)
{
    if (!(lambda < 1.0)) {
        throw domain_error("Hartree-Fock frequency needs lambda < 1");
    }
    return omega0 * std::sqrt(1.0 - lambda);
}

// Ratio of the independent-particle to the exact (linear-response) energy
// change at time t; at t = 0 the small-t limit (2/omega_e)/(1/omega1 + 1/omega2).
inline double energy_ratio(const NormalModes& modes, double omega_e, double Q, double beta, double t)
{
    if (t == 0.0) {
        return (2.0 / omega_e) / (1.0 / modes.omega1 + 1.0 / modes.omega2);
    }
    const double exact = delta_e_exponential(modes.omega1, Q, beta, t)
                         + delta_e_exponential(modes.omega2, Q, beta, t);
    return delta_e_independent(omega_e, Q, beta, t) / exact;
}

inline double energy_ratio_asymptotic(const NormalModes& modes, double omega_e, double Q, double beta)
{
    const double exact = delta_e_exponential_asymptotic(modes.omega1, Q, beta)
                         + delta_e_exponential_asymptotic(modes.omega2, Q, beta);
    return 2.0 * delta_e_exponential_asymptotic(omega_e, Q, beta) / exact;
}

} // namespace harmonium
