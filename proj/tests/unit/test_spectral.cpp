#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "harmonium/spectral.hpp"
#include "oracles/oracles.hpp"

using namespace harmonium;

namespace {

OneMatrixParams driven_params(double lambda, double t, double Q = 0.2, double beta = 1.0)
{
    const auto m = normal_modes(1.0, lambda);
    return one_matrix_params({linear_response_exponential(m.omega1, Q, beta, t), linear_response_exponential(m.omega2, Q, beta, t)}, m);
}

} // namespace

TEST(Mehler, GroundStateZ)
{
    const auto m = mehler_variables(driven_params(0.4, 0.0));
    EXPECT_NEAR(m.z, oracle::frozen::z0_L04, 1e-16);
    const auto d = mehler_variables(driven_params(0.3, 0.0));
    EXPECT_NEAR(d.z, oracle::frozen::z0_L03, 1e-16);
    const auto modes = normal_modes(1.0, 0.4);
    EXPECT_NEAR(m.z, oracle::ground_z_numeric(modes.omega1, modes.omega2), 1e-9);
}

TEST(Mehler, DefiningRelations)
{
    for (double t : {0.0, 2.0, 9.0}) {
        const auto p = driven_params(-0.75, t);
        const auto m = mehler_variables(p);
        const double z2 = m.z * m.z;
        EXPECT_NEAR(p.omega_s + p.a_coeff, m.omega_bar * (1 + z2) / (1 - z2), 1e-14);
        EXPECT_NEAR(p.a_coeff, 2 * m.omega_bar * m.z / (1 - z2), 1e-14);
    }
}

TEST(Mehler, SmallAWithoutCancellation)
{
    for (double a : {1e-6, 1e-10, 1e-200}) {
        const auto m = mehler_variables({1.0, 0.0, a});
        // z = u - sqrt(u^2 - 1) = 1/(2u) + 1/(8u^3) + O(u^-5) for large u
        const long double u = 1.0L / a + 1.0L;
        const long double ref = 0.5L / u + 0.125L / (u * u * u);
        EXPECT_NEAR(m.z / static_cast<double>(ref), 1.0, 1e-12) << a;
    }
    EXPECT_EQ(mehler_variables({1.0, 0.0, 0.0}).z, 0.0);
    EXPECT_THROW(mehler_variables({0.0, 0.0, 0.1}), domain_error);
    EXPECT_THROW(mehler_variables({1.0, 0.0, -0.1}), domain_error);
}

TEST(Occupations, SumToOneAndPurity)
{
    const MehlerVariables m{1.0, 0.3};
    const auto occ = occupations(m, 30);
    double s = occ.tail_mass, s2 = 0.0;
    for (double p : occ.p) {
        s += p;
        s2 += p * p;
    }
    EXPECT_NEAR(s, 1.0, 1e-15);
    EXPECT_NEAR(s2, purity(0.3), 1e-15 + std::pow(0.3, 62));
    for (std::size_t l = 1; l < occ.p.size(); ++l) {
        EXPECT_LT(occ.p[l], occ.p[l - 1]);
    }
    EXPECT_NEAR(occupation(0.3, 4), 0.7 * std::pow(0.3, 4), 1e-17);
}

TEST(NaturalOrbitals, OrthonormalEigenfunctions)
{
    const auto p = driven_params(0.4, 6.3, 0.35, 0.5);
    const SpectralDecomposition d(p);
    const double z = d.mehler().z;
    const double L = 12.0 / std::sqrt(d.mehler().omega_bar);
    const int n = 1201;
    for (std::size_t a : {0u, 1u, 4u}) {
        for (std::size_t b : {0u, 1u, 4u}) {
            const auto ip = oracle::trapezoid([&](double x) { return std::conj(d.orbital(a, x)) * d.orbital(b, x); }, L, n);
            EXPECT_NEAR(std::abs(ip - (a == b ? 1.0 : 0.0)), 0.0, 1e-12);
        }
        // int G1(x1, x2) phi_a(x2) dx2 = P_a phi_a(x1)
        for (double x1 : {0.0, 0.9}) {
            const auto lhs = oracle::trapezoid([&](double x2) { return gamma1_eval(p, x1, x2) * d.orbital(a, x2); }, L, n);
            EXPECT_NEAR(std::abs(lhs - occupation(z, a) * d.orbital(a, x1)), 0.0, 1e-12);
        }
    }
    EXPECT_EQ(natural_orbital(d, 2, 0.3), d.orbital(2, 0.3));
}

TEST(Reconstruction, ConvergesWithinBound)
{
    const auto p = driven_params(-2.0, 11.0);
    const SpectralDecomposition d(p);
    for (std::size_t l_max : {0u, 2u, 5u, 40u}) {
        const auto r = gamma1_reconstruct(d, 0.8, -0.3, l_max);
        EXPECT_LE(std::abs(r.value - gamma1_eval(p, 0.8, -0.3)), r.truncation_bound + 1e-15) << l_max;
    }
    EXPECT_LT(gamma1_reconstruct(d, 0.8, -0.3, 40).truncation_bound, 1e-40);
}

TEST(DeformedFamily, PreservesDensityForEveryZ)
{
    for (double zd : {0.0, 0.05, 0.4, 0.8}) {
        const auto f = deformed_family(0.6, zd);
        EXPECT_TRUE(f.density_preserved) << zd << " err " << f.max_density_error;
        EXPECT_NEAR(f.params.omega_d, 0.6 * (1 + zd) / (1 - zd), 1e-14);
    }
    EXPECT_THROW(deformed_family(0.6, 1.0), domain_error);
    EXPECT_THROW(deformed_family(0.6, -0.1), domain_error);
    EXPECT_THROW(deformed_family(0.0, 0.1), domain_error);
}
