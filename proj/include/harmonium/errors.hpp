#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace harmonium {

// Invalid physical parameters or arguments outside an operation's domain.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Requests outside tabulated data (no extrapolation is performed).
class range_error : public std::range_error {
public:
    using std::range_error::range_error;
};

// Base of all failures raised while integrating or evaluating numerically.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Scale factor fell below the configured floor (1/R^3 blow-up).
class singularity_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

// Adaptive step size underflowed or the step controller gave up.
class stiffness_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

// A rate was requested from a vanishing time scale.
class singular_rate_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

namespace detail {

// Short form of a number for error messages (std::to_string prints fixed-point).
inline std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace detail

} // namespace harmonium
