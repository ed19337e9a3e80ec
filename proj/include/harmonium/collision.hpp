// collision.hpp: classical interaction time of a heavy projectile with a
// screened, finite-range repulsive center
//
//   V(r) = (Z1 Z2 e^2 / r)(1 - r/R),   0 < r <= R,   V = 0 beyond R.
//
// The time spent inside r < R along the straight-in, deflected-out orbit has
// a closed form in terms of E1 = M1 v^2/2, a = Z1 Z2 e^2/(2 E1) and
// c = 1 + (Z1 Z2 e^2/R)/E1.

#pragma once

#include <cmath>
#include <string>

#include "harmonium/errors.hpp"

namespace harmonium {

struct CollisionParams {
    double z1{1.0};
    double z2{1.0};
    double e_sq{1.0};
    double m1{1836.15267343};
    double v{1.0};
    double b{0.0};
    double r_range{3.0};

    double coupling() const { return z1 * z2 * e_sq; }
    double kinetic_energy() const { return 0.5 * m1 * v * v; }
    double c() const { return 1.0 + coupling() / r_range / kinetic_energy(); }
    // Distance of closest approach scale a = Z1 Z2 e^2/(2 E1).
    double half_collision_diameter() const { return coupling() / (2.0 * kinetic_energy()); }
};

inline void validate(const CollisionParams& p)
{
    if (!(p.v > 0.0)) {
        throw domain_error("projectile velocity must be positive, got " + detail::num(p.v));
    }
    if (!(p.m1 > 0.0)) {
        throw domain_error("projectile mass must be positive");
    }
    if (!(p.r_range > 0.0)) {
        throw domain_error("screening range must be positive");
    }
    if (!(p.b >= 0.0 && p.b <= p.r_range)) {
        throw domain_error("impact parameter must lie in [0, R], got b=" + detail::num(p.b));
    }
    if (p.coupling() < 0.0) {
        throw domain_error("attractive couplings (Z1 Z2 < 0) are not supported");
    }
}

inline double screened_potential(const CollisionParams& p, double r)
{
    if (!(r > 0.0 && r <= p.r_range)) {
        throw domain_error("screened potential is defined on (0, R], got r=" + detail::num(r));
    }
    return p.coupling() / r * (1.0 - r / p.r_range);
}

// T = (2/v) [ sqrt(R^2-b^2)/c + a c^{-3/2} ln((sqrt(c) sqrt(R^2-b^2) + R + a)/sqrt(a^2 + c b^2)) ]
// The logarithm is evaluated as log1p of (numerator - denominator)/denominator,
// with the difference formed without cancellation, which keeps slow, strongly
// repelled projectiles (a >> R) accurate.
inline double collision_time(const CollisionParams& p)
{
    validate(p);
    const double R = p.r_range;
    const double chord = std::sqrt((R - p.b) * (R + p.b));
    const double a = p.half_collision_diameter();
    const double c = p.c();
    const double sc = std::sqrt(c);
    const double root = std::sqrt(a * a + c * p.b * p.b);
    double log_term = 0.0;
    if (a > 0.0) {
        const double excess = sc * chord + R - c * p.b * p.b / (a + root);
        log_term = a / (c * sc) * std::log1p(excess / root);
    }
    return 2.0 / p.v * (chord / c + log_term);
}

inline double collision_time_approx(const CollisionParams& p, double alpha_v)
{
    validate(p);
    if (!(alpha_v >= 2.0 && alpha_v <= 4.0)) {
        throw domain_error("alpha(v) must lie in [2, 4], got " + detail::num(alpha_v));
    }
    const double R = p.r_range;
    const double e1 = p.kinetic_energy();
    return alpha_v * R / p.v * e1 / (e1 + p.coupling() / R) * std::sqrt(1.0 - (p.b / R) * (p.b / R));
}

// alpha* for which the approximate form reproduces the closed form exactly.
inline double fitted_alpha(const CollisionParams& p)
{
    validate(p);
    if (p.b >= p.r_range) {
        throw domain_error("alpha* is undefined for grazing impact b = R");
    }
    const double R = p.r_range;
    const double e1 = p.kinetic_energy();
    const double unit = R / p.v * e1 / (e1 + p.coupling() / R) * std::sqrt(1.0 - (p.b / R) * (p.b / R));
    return collision_time(p) / unit;
}

// Switching rate of the equivalent exponential drive, beta(v) ~ 1/T(v).
inline double beta_of_velocity(const CollisionParams& p)
{
    const double T = collision_time(p);
    if (!(T > 0.0)) {
        throw singular_rate_error("collision time vanishes (grazing impact b = R); rate is singular");
    }
    return 1.0 / T;
}

} // namespace harmonium
