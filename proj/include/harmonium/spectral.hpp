// spectral.hpp: Mehler decomposition of the one-matrix
//
// Writing ws + A = wbar (1+z^2)/(1-z^2) and A = 2 wbar z/(1-z^2), Mehler's
// formula turns the Gaussian kernel into
//
//   G1(x1, x2) = sum_l (1-z) z^l phi_l(x1) conj(phi_l(x2)),
//
// with natural orbitals phi_l = Hermite functions of frequency wbar carrying
// the common chirp exp(i (m/2hbar) alpha x^2), and wbar = ws (1+z)/(1-z).

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "harmonium/errors.hpp"
#include "harmonium/hermite.hpp"
#include "harmonium/one_matrix.hpp"

namespace harmonium {

struct MehlerVariables {
    double omega_bar{1.0};
    double z{0.0};
};

// z = u - sqrt(u^2 - 1) with u = ws/A + 1, evaluated as 1/(u + sqrt(u^2 - 1))
// so that A << ws does not cancel.
inline MehlerVariables mehler_variables(const OneMatrixParams& p)
{
    if (!(p.omega_s > 0.0)) {
        throw domain_error("Mehler variables need omega_s > 0");
    }
    if (p.a_coeff < 0.0) {
        throw domain_error("Mehler variables need A >= 0");
    }
    double z = 0.0;
    if (p.a_coeff > 0.0) {
        const double u = p.omega_s / p.a_coeff + 1.0;
        z = u > 1e150 ? 0.5 / u : 1.0 / (u + std::sqrt((u - 1.0) * (u + 1.0)));
    }
    return {p.omega_s * (1.0 + z) / (1.0 - z), z};
}

struct Occupations {
    std::vector<double> p;
    // Mass beyond l_max: z^{l_max+1}.
    double tail_mass{0.0};
};

inline double occupation(double z, std::size_t l)
{
    return (1.0 - z) * std::pow(z, static_cast<double>(l));
}

inline Occupations occupations(const MehlerVariables& m, std::size_t l_max)
{
    Occupations out;
    out.p.reserve(l_max + 1);
    double zl = 1.0;
    for (std::size_t l = 0; l <= l_max; ++l) {
        out.p.push_back((1.0 - m.z) * zl);
        zl *= m.z;
    }
    out.tail_mass = zl;
    return out;
}

// sum_l P_l^2
inline double purity(double z)
{
    return (1.0 - z) / (1.0 + z);
}

class SpectralDecomposition {
public:
    explicit SpectralDecomposition(const OneMatrixParams& params, Units units = {})
        : params_(params), mehler_(mehler_variables(params)), units_(units)
    {
    }

    const MehlerVariables& mehler() const { return mehler_; }
    double alpha() const { return params_.alpha; }
    const OneMatrixParams& params() const { return params_; }
    Units units() const { return units_; }

    double occupation(std::size_t l) const { return harmonium::occupation(mehler_.z, l); }

    // phi_0 .. phi_{l_max} at x, sharing one recurrence pass.
    std::vector<std::complex<double>> orbitals(std::size_t l_max, double x) const
    {
        const double c = units_.mass / units_.hbar;
        const double scale = std::sqrt(c * mehler_.omega_bar);
        std::vector<double> h(l_max + 1);
        hermite_functions(scale * x, h);
        const std::complex<double> chirp = std::polar(std::sqrt(scale), 0.5 * c * params_.alpha * x * x);
        std::vector<std::complex<double>> out(l_max + 1);
        for (std::size_t l = 0; l <= l_max; ++l) {
            out[l] = chirp * h[l];
        }
        return out;
    }

    std::complex<double> orbital(std::size_t l, double x) const { return orbitals(l, x)[l]; }

private:
    OneMatrixParams params_;
    MehlerVariables mehler_;
    Units units_;
};

inline std::complex<double> natural_orbital(const SpectralDecomposition& d, std::size_t l, double x)
{
    return d.orbital(l, x);
}

struct Reconstruction {
    std::complex<double> value;
    // z^{l_max+1}/(1-z) * sup|phi_l|^2, with sup|psi_l| <= 1.0865 pi^{-1/4}
    // (Cramer's bound on Hermite functions).
    double truncation_bound{0.0};
};

inline Reconstruction gamma1_reconstruct(const SpectralDecomposition& d, double x1, double x2,
                                         std::size_t l_max)
{
    const auto a = d.orbitals(l_max, x1);
    const auto b = d.orbitals(l_max, x2);
    const double z = d.mehler().z;
    Reconstruction out{{0.0, 0.0}, 0.0};
    double weight = 1.0 - z;
    for (std::size_t l = 0; l <= l_max; ++l) {
        out.value += weight * a[l] * std::conj(b[l]);
        weight *= z;
    }
    constexpr double cramer = 1.0865;
    const double c = d.units().mass / d.units().hbar;
    const double sup_sq = cramer * cramer * std::sqrt(c * d.mehler().omega_bar / std::numbers::pi);
    out.truncation_bound = std::pow(z, static_cast<double>(l_max + 1)) / (1.0 - z) * sup_sq;
    return out;
}

struct DeformedParams {
    double z_d{0.0};
    double omega_d{1.0};
};

struct DeformedFamily {
    DeformedParams params;
    double max_density_error{0.0};
    bool density_preserved{false};
};

// Member of the density-preserving family sum_l (1-z_d) z_d^l |phi_l[omega_d]|^2
// with omega_d = ws (1+z_d)/(1-z_d). The density identity is checked on a grid
// over +-8 natural lengths of ws, summing orbitals until z_d^l < 1e-17.
inline DeformedFamily deformed_family(double omega_s_now, double z_d, Units u = {},
                                      double tolerance = 1e-8)
{
    if (!(z_d >= 0.0 && z_d < 1.0)) {
        throw domain_error("deformation parameter z_d must lie in [0, 1), got " + detail::num(z_d));
    }
    if (!(omega_s_now > 0.0)) {
        throw domain_error("omega_s must be positive");
    }
    DeformedFamily out;
    out.params = {z_d, omega_s_now * (1.0 + z_d) / (1.0 - z_d)};

    std::size_t l_max = 0;
    if (z_d > 0.0) {
        l_max = static_cast<std::size_t>(std::ceil(std::log(1e-17) / std::log(z_d)));
    }
    OneMatrixParams base{omega_s_now, 0.0, 0.0};
    const double c = u.mass / u.hbar;
    const double scale = std::sqrt(c * out.params.omega_d);
    const double half_width = 8.0 / std::sqrt(c * omega_s_now);
    constexpr int points = 401;
    std::vector<double> h(l_max + 1);
    for (int k = 0; k < points; ++k) {
        const double x = -half_width + 2.0 * half_width * k / (points - 1);
        hermite_functions(scale * x, h);
        double n = 0.0;
        double weight = 1.0 - z_d;
        for (std::size_t l = 0; l <= l_max; ++l) {
            n += weight * scale * h[l] * h[l];
            weight *= z_d;
        }
        out.max_density_error = std::max(out.max_density_error, std::abs(n - density(base, x, u)));
    }
    out.density_preserved = out.max_density_error < tolerance;
    return out;
}

} // namespace harmonium
