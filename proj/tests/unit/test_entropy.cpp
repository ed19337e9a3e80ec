#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "harmonium/entropy.hpp"
#include "oracles/oracles.hpp"

using namespace harmonium;

TEST(VonNeumann, ReferenceValues)
{
    EXPECT_NEAR(von_neumann_entropy(oracle::frozen::z0_L03), oracle::frozen::s_n_z0_L03, 1e-15);
    EXPECT_EQ(von_neumann_entropy(0.0), 0.0);
    EXPECT_THROW(von_neumann_entropy(1.0), domain_error);
    EXPECT_THROW(von_neumann_entropy(-1e-3), domain_error);
}

TEST(VonNeumann, MatchesOccupationSum)
{
    for (double z : {1e-12, 1e-3, 0.04, 0.5, 0.95}) {
        double s = 0.0;
        for (std::size_t l = 0; l < 20000; ++l) {
            const double p = occupation(z, l);
            if (p < 1e-320) {
                break;
            }
            s -= p * std::log(p);
        }
        EXPECT_NEAR(von_neumann_entropy(z), s, 1e-10 * std::max(1.0, s)) << z;
    }
}

TEST(Renyi, OrderTwoIsMinusLogPurity)
{
    for (double z : {0.01, 0.2, 0.7}) {
        EXPECT_NEAR(renyi_entropy(z, 2.0), -std::log(purity(z)), 1e-14);
    }
}

TEST(Renyi, NonIncreasingInOrder)
{
    for (double z : {0.03, 0.4}) {
        double prev = INFINITY;
        for (double q : {0.1, 0.5, 0.9, 1.0, 1.5, 2.0, 5.0, 50.0}) {
            const double s = renyi_entropy(z, q);
            EXPECT_LE(s, prev + 1e-15) << q;
            prev = s;
        }
        // q -> infinity: min-entropy -ln(1 - z)
        EXPECT_NEAR(renyi_entropy(z, 1e6), -std::log1p(-z), 1e-5);
    }
}

TEST(Renyi, ContinuousThroughOne)
{
    const double z = oracle::frozen::z0_L04;
    const double sn = von_neumann_entropy(z);
    for (double h : {1e-3, 1e-4, 1e-5}) {
        const double central = 0.5 * (renyi_entropy(z, 1 + h) + renyi_entropy(z, 1 - h));
        EXPECT_NEAR(central, sn, 10 * h * h);
    }
    EXPECT_EQ(renyi_entropy(z, 1.0), sn);
    EXPECT_THROW(renyi_entropy(z, 0.0), domain_error);
    EXPECT_THROW(renyi_entropy(z, -1.0), domain_error);
}

TEST(EntropyTrajectory, DualPairStartsEqual)
{
    const auto g = uniform_grid(5.0, 0.5);
    const std::vector<double> q{0.5, 2.0};
    const auto a = entropy_trajectory({1.0, 1.0, 1.0, 0.3, 0.2, ExponentialSwitch{2.0}}, g, q);
    const auto b = entropy_trajectory({1.0, 1.0, 1.0, -0.75, 0.2, ExponentialSwitch{2.0}}, g, q);
    ASSERT_EQ(a.size(), g.size());
    EXPECT_NEAR(a[0].s_von_neumann, b[0].s_von_neumann, 1e-15);
    EXPECT_NEAR(a[0].s_renyi.at(2.0), b[0].s_renyi.at(2.0), 1e-15);
    EXPECT_GT(std::abs(a[4].s_von_neumann - b[4].s_von_neumann), 1e-4);
}

TEST(EntropyTrajectory, ConstantUnderQuench)
{
    const auto g = uniform_grid(50.0, 1.0);
    const auto e = entropy_trajectory({1.0, 1.0, 1.0, -2.0, 0.0, TotalQuench{}}, g, std::vector<double>{3.0});
    for (const auto& s : e) {
        EXPECT_NEAR(s.s_von_neumann, e[0].s_von_neumann, 1e-13);
        EXPECT_NEAR(s.s_renyi.at(3.0), e[0].s_renyi.at(3.0), 1e-13);
    }
}
