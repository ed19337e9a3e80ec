// model.hpp: parameters, normal modes and drive profiles of the driven
// two-particle harmonic model
//
//   H0 = -(hbar^2/2m)(d1^2 + d2^2) + (m/2) omega0^2 (x1^2 + x2^2)
//        - (m/2) lambda omega0^2 (x1 - x2)^2
//
// The normal coordinates X1 = (x1+x2)/sqrt2, X2 = (x1-x2)/sqrt2 decouple H0
// into two oscillators with omega1 = omega0 and omega2 = omega0 sqrt(1-2 lambda).
// A quadrupolar drive Q F(t) (x1^2 + x2^2) acts on both modes alike.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

// Boost 1.74's pchip calls isnan unqualified; make std::isnan visible there.
namespace boost::math::interpolators {
using std::isnan;
}
#include <boost/math/interpolators/pchip.hpp>

#include "harmonium/errors.hpp"

namespace harmonium {

// Per-mode quantity; index 0 is the center-of-mass mode, 1 the relative mode.
template <class T>
using ModePair = std::array<T, 2>;

struct Units {
    double hbar{1.0};
    double mass{1.0};
};

// F(t) = Theta(t) exp(-beta t), with Theta(0) = 1.
struct ExponentialSwitch {
    double beta{1.0};
};

// Every potential (confinement and interaction) is removed for t >= 0.
struct TotalQuench {};

struct NoDrive {};

// Sampled F(t), interpolated with a monotone (shape-preserving) cubic.
class Tabulated {
public:
    explicit Tabulated(std::vector<std::pair<double, double>> samples)
        : samples_(std::move(samples))
    {
        if (samples_.size() < 4) {
            throw domain_error("tabulated drive needs at least 4 samples, got "
                               + std::to_string(samples_.size()));
        }
        for (std::size_t i = 1; i < samples_.size(); ++i) {
            if (!(samples_[i].first > samples_[i - 1].first)) {
                throw domain_error("tabulated drive times must be strictly increasing (sample "
                                   + std::to_string(i) + ")");
            }
        }
        std::vector<double> t, f;
        t.reserve(samples_.size());
        f.reserve(samples_.size());
        for (const auto& [ti, fi] : samples_) {
            t.push_back(ti);
            f.push_back(fi);
        }
        interp_ = std::make_shared<const Interpolator>(std::move(t), std::move(f));
    }

    double operator()(double t) const
    {
        if (t < t_begin() || t > t_end()) {
            throw range_error("tabulated drive requested at t=" + detail::num(t)
                              + " outside [" + detail::num(t_begin()) + ", "
                              + detail::num(t_end()) + "]");
        }
        return (*interp_)(t);
    }

    double t_begin() const { return samples_.front().first; }
    double t_end() const { return samples_.back().first; }
    const std::vector<std::pair<double, double>>& samples() const { return samples_; }

private:
    using Interpolator = boost::math::interpolators::pchip<std::vector<double>>;

    std::vector<std::pair<double, double>> samples_;
    std::shared_ptr<const Interpolator> interp_;
};

using DriveProfile = std::variant<NoDrive, ExponentialSwitch, TotalQuench, Tabulated>;

struct ModelConfig {
    double hbar{1.0};
    double mass{1.0};
    double omega0{1.0};
    double lambda{0.0};
    double q_strength{0.0};
    DriveProfile drive{NoDrive{}};

    Units units() const { return {hbar, mass}; }
};

struct NormalModes {
    double omega1{1.0};
    double omega2{1.0};

    ModePair<double> frequencies() const { return {omega1, omega2}; }
};

struct NormalCoordinates {
    double X1{0.0};
    double X2{0.0};
};

inline NormalModes normal_modes(double omega0, double lambda)
{
    if (!(omega0 > 0.0)) {
        throw domain_error("omega0 must be positive, got " + detail::num(omega0));
    }
    if (!(lambda < 0.5)) {
        throw domain_error("lambda must be below the stability limit 0.5 (relative mode "
                           "frequency omega0*sqrt(1-2*lambda) must be real), got "
                           + detail::num(lambda));
    }
    return {omega0, omega0 * std::sqrt(1.0 - 2.0 * lambda)};
}

inline NormalModes normal_modes(const ModelConfig& config)
{
    return normal_modes(config.omega0, config.lambda);
}

inline NormalCoordinates to_normal_coordinates(double x1, double x2)
{
    return {(x1 + x2) / std::sqrt(2.0), (x1 - x2) / std::sqrt(2.0)};
}

inline std::pair<double, double> from_normal_coordinates(NormalCoordinates X)
{
    return {(X.X1 + X.X2) / std::sqrt(2.0), (X.X1 - X.X2) / std::sqrt(2.0)};
}

// Attractive coupling whose ground state has the same Mehler parameter z0
// (hence the same entropies) as the repulsive coupling lambda_r. z0 depends
// only on rho = omega2/omega1 and is invariant under rho -> 1/rho.
inline double duality_partner(double lambda_r)
{
    if (!(lambda_r > 0.0 && lambda_r < 0.5)) {
        throw domain_error("duality partner needs a repulsive coupling in (0, 0.5), got "
                           + detail::num(lambda_r));
    }
    return -lambda_r / (1.0 - 2.0 * lambda_r);
}

inline void validate(const DriveProfile& drive)
{
    if (const auto* e = std::get_if<ExponentialSwitch>(&drive)) {
        if (!(e->beta > 0.0)) {
            throw domain_error("exponential switch rate beta must be positive, got "
                               + detail::num(e->beta));
        }
    }
}

inline void validate(const ModelConfig& config)
{
    if (!(config.hbar > 0.0) || !(config.mass > 0.0)) {
        throw domain_error("hbar and mass must be positive");
    }
    const NormalModes modes = normal_modes(config);
    const double limit = std::min(modes.omega1, modes.omega2);
    if (!std::holds_alternative<TotalQuench>(config.drive)
        && !(std::abs(config.q_strength) < limit)) {
        throw domain_error("|Q| must stay below min(omega1, omega2) = " + detail::num(limit)
                           + " for linear response, got " + detail::num(config.q_strength));
    }
    validate(config.drive);
}

inline double drive_value(const DriveProfile& profile, double t)
{
    struct Visitor {
        double t;
        double operator()(const NoDrive&) const { return 0.0; }
        double operator()(const ExponentialSwitch& e) const
        {
            return t < 0.0 ? 0.0 : std::exp(-e.beta * t);
        }
        double operator()(const TotalQuench&) const
        {
            throw domain_error("a total quench removes the confinement; it has no F(t) form");
        }
        double operator()(const Tabulated& tab) const { return tab(t); }
    };
    return std::visit(Visitor{t}, profile);
}

// Squared mode frequency seen by a mode of unperturbed frequency omega.
// Positive Q softens the trap: Omega^2 = omega^2 - Q F(t), the sign under
// which r'' + (2 omega)^2 r = +Q F(t) is the linearization of the scale
// equation.
inline double driven_omega_sq(const ModelConfig& config, double omega, double t)
{
    if (std::holds_alternative<TotalQuench>(config.drive)) {
        return t < 0.0 ? omega * omega : 0.0;
    }
    return omega * omega - config.q_strength * drive_value(config.drive, t);
}

} // namespace harmonium
