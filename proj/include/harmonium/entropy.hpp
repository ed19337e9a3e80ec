#pragma once

#include <cmath>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "harmonium/errors.hpp"
#include "harmonium/model.hpp"
#include "harmonium/one_matrix.hpp"
#include "harmonium/scale_dynamics.hpp"
#include "harmonium/spectral.hpp"

namespace harmonium {

namespace detail {

inline void check_z(double z)
{
    if (!(z >= 0.0 && z < 1.0)) {
        throw domain_error("Mehler parameter z must lie in [0, 1), got " + detail::num(z));
    }
}

// Below this z is treated as exactly zero (pure state).
inline constexpr double z_zero = 1e-300;

} // namespace detail

// Entropies are in nats.
inline double von_neumann_entropy(double z)
{
    detail::check_z(z);
    if (z < detail::z_zero) {
        return 0.0;
    }
    return -std::log1p(-z) - z / (1.0 - z) * std::log(z);
}

// S_q = ln[(1-z)^q / (1 - z^q)] / (1 - q); q -> 1 falls back to von Neumann.
inline double renyi_entropy(double z, double q)
{
    detail::check_z(z);
    if (!(q > 0.0)) {
        throw domain_error("Renyi order must be positive, got " + detail::num(q));
    }
    if (std::abs(q - 1.0) < 1e-6) {
        return von_neumann_entropy(z);
    }
    if (z < detail::z_zero) {
        return 0.0;
    }
    const double zq = std::exp(q * std::log(z));
    return (q * std::log1p(-z) - std::log1p(-zq)) / (1.0 - q);
}

struct EntropySample {
    double t{0.0};
    double z{0.0};
    double s_von_neumann{0.0};
    std::map<double, double> s_renyi;
};

inline EntropySample entropy_sample(double t, double z, std::span<const double> q_list)
{
    EntropySample s{t, z, von_neumann_entropy(z), {}};
    for (double q : q_list) {
        s.s_renyi[q] = renyi_entropy(z, q);
    }
    return s;
}

// scale states -> one-matrix -> Mehler z -> entropies, per grid time.
inline std::vector<EntropySample> entropy_trajectory(const ModelConfig& config, std::span<const double> grid,
                                                     std::span<const double> q_list,
                                                     ScaleSource source = ScaleSource::automatic)
{
    const ModeTrajectories traj = evolve_modes(config, grid, source);
    std::vector<EntropySample> out;
    out.reserve(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto params = one_matrix_params({traj.states[0][k], traj.states[1][k]}, traj.modes);
        out.push_back(entropy_sample(grid[k], mehler_variables(params).z, q_list));
    }
    return out;
}

} // namespace harmonium
