#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "harmonium/errors.hpp"

namespace harmonium {

// Hermite functions psi_l(xi) = H_l(xi) exp(-xi^2/2) / sqrt(2^l l! sqrt(pi))
// for l = 0 .. out.size()-1, through the orthonormal three-term recurrence
//   psi_{l+1} = sqrt(2/(l+1)) xi psi_l - sqrt(l/(l+1)) psi_{l-1}.
// No factorials are formed, so high orders stay finite.
inline void hermite_functions(double xi, std::span<double> out)
{
    if (out.empty()) {
        return;
    }
    constexpr double pi_m4 = 0.75112554446494248285870300477623; // pi^{-1/4}
    out[0] = pi_m4 * std::exp(-0.5 * xi * xi);
    if (out.size() == 1) {
        return;
    }
    out[1] = std::sqrt(2.0) * xi * out[0];
    for (std::size_t l = 1; l + 1 < out.size(); ++l) {
        const double lp1 = static_cast<double>(l + 1);
        out[l + 1] = std::sqrt(2.0 / lp1) * xi * out[l] - std::sqrt(static_cast<double>(l) / lp1) * out[l - 1];
    }
}

inline double hermite_function(std::size_t l, double xi)
{
    std::vector<double> buf(l + 1);
    hermite_functions(xi, buf);
    return buf[l];
}

// Nodes (ascending) and weights for  int f(x) exp(-x^2) dx ~= sum w_k f(x_k).
struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

namespace detail {

// psi_n(z) and sqrt(2n) psi_{n-1}(z): the orthonormal recurrence carrying the
// factor exp(-z^2/2), so that large rules do not overflow near the outermost
// roots. Their ratio is the Newton step of the polynomial H_n.
inline std::pair<double, double> hermite_pair(std::size_t n, double z)
{
    constexpr double pi_m4 = 0.75112554446494248285870300477623;
    double p1 = pi_m4 * std::exp(-0.5 * z * z);
    double p2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        const double jd = static_cast<double>(j);
        p1 = z * std::sqrt(2.0 / (jd + 1.0)) * p2 - std::sqrt(jd / (jd + 1.0)) * p3;
    }
    return {p1, std::sqrt(2.0 * static_cast<double>(n)) * p2};
}

} // namespace detail

// Positive roots are bracketed by a sign-change scan of psi_n on a step well
// below the smallest root spacing (~ pi/sqrt(2n+1)), then polished by Newton
// steps that are kept inside the bracket.
inline GaussHermiteRule gauss_hermite(std::size_t n)
{
    if (n == 0) {
        throw domain_error("Gauss-Hermite rule needs at least one node");
    }
    if (n > 600) {
        // exp(-z^2/2) at the outer roots underflows beyond this
        throw domain_error("Gauss-Hermite rules are limited to 600 nodes");
    }
    const double nd = static_cast<double>(n);
    const double edge = std::sqrt(2.0 * nd + 1.0);
    const double step = 0.1 * std::numbers::pi / edge;

    std::vector<double> roots; // descending
    double b = edge + 1.0;
    double fb = detail::hermite_pair(n, b).first;
    while (b > 0.5 * step && roots.size() < n / 2) {
        const double a = std::max(b - step, 0.25 * step);
        const double fa = detail::hermite_pair(n, a).first;
        if ((fa < 0.0) != (fb < 0.0)) {
            double lo = a, hi = b, z = 0.5 * (a + b);
            const bool neg_lo = fa < 0.0;
            for (int it = 0; it < 100; ++it) {
                const auto [p, dp] = detail::hermite_pair(n, z);
                ((p < 0.0) == neg_lo ? lo : hi) = z;
                double next = z - p / dp;
                if (!(next > lo && next < hi)) {
                    next = 0.5 * (lo + hi);
                }
                if (std::abs(next - z) <= 1e-15 * std::max(1.0, z)) {
                    z = next;
                    break;
                }
                z = next;
            }
            roots.push_back(z);
        }
        b = a;
        fb = fa;
    }
    if (roots.size() != n / 2) {
        throw numerical_error("Gauss-Hermite root scan found " + std::to_string(roots.size()) + " of "
                              + std::to_string(n / 2) + " positive roots");
    }

    GaussHermiteRule rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);
    auto weight = [n](double z) {
        const double dp = detail::hermite_pair(n, z).second;
        return 2.0 / (dp * dp) * std::exp(-z * z);
    };
    for (std::size_t i = 0; i < roots.size(); ++i) {
        rule.nodes[i] = -roots[i];
        rule.nodes[n - 1 - i] = roots[i];
        rule.weights[i] = rule.weights[n - 1 - i] = weight(roots[i]);
    }
    if (n % 2 == 1) {
        rule.weights[n / 2] = weight(0.0);
    }
    return rule;
}

} // namespace harmonium
