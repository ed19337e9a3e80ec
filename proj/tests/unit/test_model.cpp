#include <gtest/gtest.h>

#include <cmath>
#include <fstream>

#include "harmonium/model.hpp"
#include "harmonium/one_matrix.hpp"
#include "harmonium/spectral.hpp"
#include "oracles/oracles.hpp"

using namespace harmonium;

TEST(NormalModes, MatchDiagonalizedCouplingMatrix)
{
    for (double lambda : {0.4, 0.3, 0.0, -0.75, -2.0}) {
        const auto m = normal_modes(1.3, lambda);
        const auto [w1, w2] = oracle::mode_frequencies(1.3, lambda);
        EXPECT_NEAR(m.omega1, w1, 1e-14) << lambda;
        EXPECT_NEAR(m.omega2, w2, 1e-14) << lambda;
    }
}

TEST(NormalModes, UncoupledIsDegenerate)
{
    const auto m = normal_modes(2.0, 0.0);
    EXPECT_DOUBLE_EQ(m.omega1, 2.0);
    EXPECT_DOUBLE_EQ(m.omega2, 2.0);
}

TEST(NormalModes, StabilityLimit)
{
    EXPECT_THROW(normal_modes(1.0, 0.5), domain_error);
    EXPECT_THROW(normal_modes(1.0, 0.7), domain_error);
    EXPECT_THROW(normal_modes(0.0, 0.1), domain_error);
    EXPECT_THROW(normal_modes(-1.0, 0.1), domain_error);
}

TEST(NormalCoordinates, RoundTrip)
{
    for (double x1 : {-1.5, 0.0, 0.7}) {
        for (double x2 : {-0.2, 2.5}) {
            const auto [y1, y2] = from_normal_coordinates(to_normal_coordinates(x1, x2));
            EXPECT_NEAR(y1, x1, 1e-15);
            EXPECT_NEAR(y2, x2, 1e-15);
        }
    }
    const auto X = to_normal_coordinates(1.0, 1.0);
    EXPECT_NEAR(X.X1, std::sqrt(2.0), 1e-15);
    EXPECT_EQ(X.X2, 0.0);
}

TEST(Duality, PartnerHasEqualGroundStateZ)
{
    auto z_of = [](double lambda) {
        return mehler_variables(one_matrix_params({ScaleState{}, ScaleState{}}, normal_modes(1.0, lambda))).z;
    };
    for (double lr : {0.1, 0.3, 0.4, 0.45}) {
        const double bisected = oracle::equal_z_partner(lr, z_of);
        EXPECT_NEAR(duality_partner(lr), bisected, 1e-9) << lr;
        EXPECT_NEAR(z_of(duality_partner(lr)), z_of(lr), 1e-15);
    }
    EXPECT_NEAR(duality_partner(0.3), -0.75, 1e-15);
    EXPECT_NEAR(duality_partner(0.4), -2.0, 1e-14);
    EXPECT_THROW(duality_partner(0.0), domain_error);
    EXPECT_THROW(duality_partner(-0.3), domain_error);
    EXPECT_THROW(duality_partner(0.5), domain_error);
}

TEST(Drive, ExponentialSwitch)
{
    const DriveProfile d = ExponentialSwitch{0.5};
    EXPECT_EQ(drive_value(d, -1.0), 0.0);
    EXPECT_EQ(drive_value(d, 0.0), 1.0);
    EXPECT_NEAR(drive_value(d, 2.0), std::exp(-1.0), 1e-16);
    EXPECT_THROW(validate(DriveProfile{ExponentialSwitch{0.0}}), domain_error);
    EXPECT_THROW(validate(DriveProfile{ExponentialSwitch{-1.0}}), domain_error);
}

TEST(Drive, QuenchHasNoForcingForm)
{
    const DriveProfile d = TotalQuench{};
    EXPECT_THROW(drive_value(d, 1.0), domain_error);
    ModelConfig c{1.0, 1.0, 1.0, 0.4, 0.0, TotalQuench{}};
    EXPECT_EQ(driven_omega_sq(c, 0.7, 0.0), 0.0);
    EXPECT_NEAR(driven_omega_sq(c, 0.7, -0.1), 0.49, 1e-16);
}

TEST(Drive, SignConvention)
{
    ModelConfig c{1.0, 1.0, 1.0, 0.4, 0.2, ExponentialSwitch{1.0}};
    EXPECT_NEAR(driven_omega_sq(c, 1.0, 0.0), 0.8, 1e-15);
    EXPECT_NEAR(driven_omega_sq(c, 1.0, 100.0), 1.0, 1e-15);
}

TEST(Drive, TabulatedInterpolatesWithinRange)
{
    std::vector<std::pair<double, double>> s;
    for (int i = 0; i <= 20; ++i) {
        s.emplace_back(0.5 * i, std::exp(-0.5 * i));
    }
    const Tabulated tab(s);
    EXPECT_NEAR(tab(0.0), 1.0, 1e-15);
    EXPECT_NEAR(tab(10.0), std::exp(-10.0), 1e-15);
    EXPECT_NEAR(tab(1.25), std::exp(-1.25), 5e-3);
    EXPECT_THROW(tab(-0.1), range_error);
    EXPECT_THROW(tab(10.5), range_error);
}

TEST(Drive, TabulatedRejectsBadSamples)
{
    EXPECT_THROW((Tabulated({{0, 1}, {1, 1}, {2, 1}})), domain_error);
    EXPECT_THROW((Tabulated({{0, 1}, {1, 1}, {1, 1}, {2, 1}})), domain_error);
    EXPECT_THROW((Tabulated({{0, 1}, {2, 1}, {1, 1}, {3, 1}})), domain_error);
}

TEST(Config, WeakDriveBound)
{
    ModelConfig c{1.0, 1.0, 1.0, 0.4, 0.5, ExponentialSwitch{1.0}};
    EXPECT_THROW(validate(c), domain_error); // min omega = 0.447
    c.q_strength = 0.4;
    EXPECT_NO_THROW(validate(c));
    c.drive = TotalQuench{};
    c.q_strength = 5.0;
    EXPECT_NO_THROW(validate(c));
    c.hbar = 0.0;
    EXPECT_THROW(validate(c), domain_error);
}
