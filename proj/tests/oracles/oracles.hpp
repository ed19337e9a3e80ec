// Independent reference computations for the test suites. Nothing here calls
// the closed forms it is used to check.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace oracle {

// High-precision constants evaluated once with mpmath (50 digits).
namespace frozen {
inline constexpr double omega_s0_L04 = 0.618033988749894848;     // (sqrt5 - 1)/2
inline constexpr double a0_L04 = 0.0527864045000420607;
inline constexpr double z0_L04 = 0.0394057578502666815;
inline constexpr double z0_L03 = 0.0130046893109867469;          // equal to Lambda = -0.75
inline constexpr double s_n_z0_L03 = 0.0703062215319129356;
inline constexpr double collision_t_v1_b1 = 5.65672011439652247; // Z1=Z2=1, M1=1836.15267343, R=3, v=1, b=1
} // namespace frozen

// Least-squares slope of log y against log x.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Fourth-order central first derivative.
inline double d1(const std::function<double(double)>& f, double x, double h)
{
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

// Normal-mode frequencies from the coupled 2x2 problem, diagonalized
// numerically: H = p1^2/2 + p2^2/2 + w0^2 (x1^2 + x2^2)/2 - L w0^2 (x1 - x2)^2/2.
inline std::pair<double, double> mode_frequencies(double omega0, double lambda)
{
    Eigen::Matrix2d k;
    const double w2 = omega0 * omega0;
    k << w2 - lambda * w2, lambda * w2, lambda * w2, w2 - lambda * w2;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(k);
    const auto ev = es.eigenvalues();
    // Center-of-mass mode keeps w0; the other one is the relative mode.
    const double a = std::sqrt(ev(0)), b = std::sqrt(ev(1));
    return std::abs(a - omega0) < std::abs(b - omega0) ? std::pair{a, b} : std::pair{b, a};
}

// Ground-state Mehler parameter by brute force: trace the lowest two-mode
// Gaussian over x2 on a grid and read z from the kernel's top two eigenvalues
// (lambda_1/lambda_0 = z).
inline double ground_z_numeric(double omega1, double omega2, int n = 401, double half_width = 9.0)
{
    const double w = std::min(omega1, omega2);
    const double L = half_width / std::sqrt(w);
    const double h = 2 * L / (n - 1);
    Eigen::MatrixXd psi(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double x1 = -L + i * h, x2 = -L + j * h;
            const double X = (x1 + x2) / std::sqrt(2.0), Y = (x1 - x2) / std::sqrt(2.0);
            psi(i, j) = std::exp(-0.5 * omega1 * X * X - 0.5 * omega2 * Y * Y);
        }
    }
    Eigen::MatrixXd g = psi * psi.transpose() * h * h;
    g /= g.trace();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
    const auto ev = es.eigenvalues();
    return ev(n - 2) / ev(n - 1);
}

// Eigenvalues of a Hermitian kernel K(x1, x2) discretized with the trapezoid
// rule on [-L, L], in descending order.
inline std::vector<double> kernel_eigenvalues(const std::function<std::complex<double>(double, double)>& k,
                                              double half_width, int n)
{
    const double h = 2 * half_width / (n - 1);
    Eigen::MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            const auto v = k(-half_width + i * h, -half_width + j * h) * h;
            m(i, j) = v;
            m(j, i) = std::conj(v);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(ev.rbegin(), ev.rend());
    return ev;
}

// Trapezoid rule on [-L, L] for smooth, rapidly decaying integrands.
template <class F>
auto trapezoid(F f, double half_width, int n)
{
    const double h = 2 * half_width / (n - 1);
    decltype(f(0.0)) s = 0.5 * (f(-half_width) + f(half_width));
    for (int i = 1; i < n - 1; ++i) {
        s += f(-half_width + i * h);
    }
    return s * h;
}

// Time spent inside r < R on a classical orbit in V = k (1/r - 1/R), from the
// radial equation of motion: T = 2 int_{r_turn}^{R} dr / |r'|, with
// r'^2 = (2/M)(E - V) - (v b / r)^2. The substitution r = r_turn + s^2
// removes the inverse square-root singularity at the turning point.
inline double orbit_time_inside(double k, double m1, double v, double b, double R)
{
    const double E = 0.5 * m1 * v * v;
    auto rdot_sq = [&](double r) {
        const double V = k * (1.0 / r - 1.0 / R);
        return 2.0 / m1 * (E - V) - (v * b / r) * (v * b / r);
    };
    // Turning point: largest root of rdot_sq, found by bracketing on (0, R].
    double lo = 1e-300, hi = R;
    if (rdot_sq(hi) <= 0.0) {
        return 0.0;
    }
    if (b == 0.0 && k == 0.0) {
        lo = 0.0;
    } else {
        for (int i = 0; i < 400; ++i) {
            const double mid = 0.5 * (lo + hi);
            (rdot_sq(mid) > 0.0 ? hi : lo) = mid;
        }
    }
    const double r_turn = lo == 0.0 ? 0.0 : hi;
    const double s_max = std::sqrt(R - r_turn);
    // limit of 2 s / sqrt(rdot_sq(r_turn + s^2)) as s -> 0
    const double dr = 1e-6 * std::max(r_turn, 1e-12);
    const double at_turn = 2.0 / std::sqrt((rdot_sq(r_turn + 2 * dr) - rdot_sq(r_turn + dr)) / dr);
    auto integrand = [&](double s) {
        const double q = rdot_sq(r_turn + s * s);
        if (s * s < 1e-9 * std::max(r_turn, 1e-12) || !(q > 0.0)) {
            return at_turn;
        }
        return 2.0 * s / std::sqrt(q);
    };
    using boost::math::quadrature::gauss_kronrod;
    const double t_half = gauss_kronrod<double, 61>::integrate(integrand, 0.0, s_max, 15, 1e-14);
    return 2.0 * t_half;
}

// Negative coupling with the same ground-state Mehler parameter, located by
// bisection on the numerically evaluated z.
inline double equal_z_partner(double lambda_r, const std::function<double(double)>& z_of_lambda)
{
    const double target = z_of_lambda(lambda_r);
    double lo = -50.0, hi = -1e-9; // z grows as lambda decreases below 0
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (z_of_lambda(mid) > target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace oracle
