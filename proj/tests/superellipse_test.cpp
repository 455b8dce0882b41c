#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

using namespace lame;
using lame::testing::Gen;

namespace {

const SuperellipseParams kP534{5.0, 3.0, 4.0};

} // namespace

TEST(SuperellipseParams, RejectsInvalidValues)
{
    const double inf = std::numeric_limits<double>::infinity();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(SuperellipseParams(0.0, 1.0, 2.0), InvalidArgument);
    EXPECT_THROW(SuperellipseParams(1.0, -1.0, 2.0), InvalidArgument);
    EXPECT_THROW(SuperellipseParams(1.0, 1.0, 1.0), InvalidArgument);
    EXPECT_THROW(SuperellipseParams(1.0, 1.0, 0.5), InvalidArgument);
    EXPECT_THROW(SuperellipseParams(inf, 1.0, 2.0), InvalidArgument);
    EXPECT_THROW(SuperellipseParams(1.0, nan, 2.0), InvalidArgument);
    EXPECT_THROW(SuperellipseParams(1.0, 1.0, inf), InvalidArgument);
    EXPECT_NO_THROW(SuperellipseParams(1.0, 1.0, 1.0000001));
}

TEST(WeightedPNorm, KnownValues)
{
    // 0.5^4/625 + (sqrt(3)/2)^4/81, to the 1/4.
    EXPECT_NEAR(weightedPNorm(kP534, {-0.5, std::sqrt(3.0) / 2.0}), 0.28970879991253483446, 1e-15);
    EXPECT_DOUBLE_EQ(weightedPNorm(kP534, {5.0, 0.0}), 1.0);
    EXPECT_DOUBLE_EQ(weightedPNorm(kP534, {0.0, -3.0}), 1.0);
    EXPECT_EQ(weightedPNorm(kP534, {0.0, 0.0}), 0.0);

    const SuperellipseParams circle{2.0, 2.0, 2.0};
    EXPECT_NEAR(weightedPNorm(circle, {3.0, 4.0}), 2.5, 1e-15);
}

TEST(WeightedPNorm, NoOverflowForLargeInputs)
{
    const SuperellipseParams params{1.0, 1.0, 8.0};
    const double n = weightedPNorm(params, {1e300, 1e300});
    EXPECT_TRUE(std::isfinite(n));
    EXPECT_NEAR(n / 1e300, std::pow(2.0, 1.0 / 8.0), 1e-14);
    EXPECT_GT(weightedPNorm(params, {1e-300, 0.0}), 0.0);
}

TEST(WeightedPNorm, PropertyAbsoluteHomogeneity)
{
    Gen gen(11);
    for (int i = 0; i < 2000; ++i) {
        const auto params = gen.params();
        const Point2 q{gen.uniform(-50, 50), gen.uniform(-50, 50)};
        const double lambda = gen.uniform(-20, 20);
        EXPECT_NEAR(weightedPNorm(params, lambda * q), std::fabs(lambda) * weightedPNorm(params, q),
                    1e-12 * (1.0 + std::fabs(lambda) * weightedPNorm(params, q)));
    }
}

TEST(WeightedPNorm, PropertyTriangleInequality)
{
    Gen gen(12);
    for (int i = 0; i < 2000; ++i) {
        const auto params = gen.params();
        const Point2 u{gen.uniform(-10, 10), gen.uniform(-10, 10)};
        const Point2 v{gen.uniform(-10, 10), gen.uniform(-10, 10)};
        EXPECT_LE(weightedPNorm(params, u + v), weightedPNorm(params, u) + weightedPNorm(params, v) + 1e-12);
    }
}

TEST(DiskMembership, ClassifiesAroundTheBoundary)
{
    EXPECT_EQ(diskMembership(kP534, {0.0, 0.0}), DiskMembership::StrictInterior);
    EXPECT_EQ(diskMembership(kP534, {5.0, 0.0}), DiskMembership::Boundary);
    EXPECT_EQ(diskMembership(kP534, {5.0 + 1e-6, 0.0}), DiskMembership::Exterior);
    EXPECT_EQ(diskMembership(kP534, {5.0 - 1e-6, 0.0}), DiskMembership::StrictInterior);
    EXPECT_TRUE(inDisk(kP534, {5.0, 0.0}));
    EXPECT_FALSE(inDisk(kP534, {4.0, 3.0}));
}

TEST(Phi, MapsAxesToSemiAxes)
{
    const Point2 e0 = phi(kP534, {1.0, 0.0});
    const Point2 e1 = phi(kP534, {0.0, 1.0});
    EXPECT_DOUBLE_EQ(e0.x, 5.0);
    EXPECT_EQ(e0.y, 0.0);
    EXPECT_EQ(e1.x, 0.0);
    EXPECT_DOUBLE_EQ(e1.y, 3.0);
}

TEST(Phi, RejectsPointsOffTheUnitCircle)
{
    EXPECT_THROW((void)phi(kP534, {1.0, 1.0}), GeometryError);
    EXPECT_THROW((void)phi(kP534, {0.0, 0.0}), GeometryError);
    EXPECT_THROW((void)phi(kP534, {std::numeric_limits<double>::quiet_NaN(), 1.0}), GeometryError);
    EXPECT_NO_THROW((void)phi(kP534, {1.0 + 1e-10, 0.0}));
}

TEST(Psi, RejectsPointsOffTheCurve)
{
    EXPECT_THROW((void)psi(kP534, {1.0, 1.0}), GeometryError);
    EXPECT_THROW((void)psi(kP534, {0.0, 0.0}), GeometryError);
    EXPECT_NO_THROW((void)psi(kP534, {0.0, 3.0}));
}

TEST(BoundaryPoint, PropertyLiesOnCurve)
{
    Gen gen(13);
    for (int trial = 0; trial < 20; ++trial) {
        const auto params = gen.params();
        for (int i = 0; i < 10'000; ++i) {
            const double theta = kTwoPi * i / 10'000.0;
            const Point2 c = boundaryPoint(params, theta);
            ASSERT_NEAR(weightedPNorm(params, c), 1.0, 1e-12);
        }
    }
}

TEST(BoundaryPoint, PropertyPolarAngleIsPreserved)
{
    Gen gen(14);
    for (int i = 0; i < 5000; ++i) {
        const auto params = gen.params();
        const double theta = gen.uniform(-std::numbers::pi + 1e-9, std::numbers::pi);
        const Point2 c = boundaryPoint(params, theta);
        EXPECT_NEAR(std::atan2(c.y, c.x), theta, 1e-12);
    }
}

TEST(BoundaryPoint, PropertyFourFoldSymmetry)
{
    Gen gen(15);
    for (int i = 0; i < 2000; ++i) {
        const auto params = gen.params();
        const double theta = gen.uniform(0.0, std::numbers::pi / 2);
        const Point2 c = boundaryPoint(params, theta);
        const Point2 m = boundaryPoint(params, std::numbers::pi - theta);
        const Point2 r = boundaryPoint(params, std::numbers::pi + theta);
        const double s = std::max(params.a(), params.b()) * 1e-14;
        EXPECT_NEAR(m.x, -c.x, s);
        EXPECT_NEAR(m.y, c.y, s);
        EXPECT_NEAR(r.x, -c.x, s);
        EXPECT_NEAR(r.y, -c.y, s);
    }
}

TEST(BoundaryPoint, PeriodicInTheta)
{
    const Point2 a = boundaryPoint(kP534, 1.0);
    const Point2 b = boundaryPoint(kP534, 1.0 + kTwoPi);
    const Point2 c = boundaryPoint(kP534, 1.0 - 2 * kTwoPi);
    EXPECT_NEAR(a.x, b.x, 1e-13);
    EXPECT_NEAR(a.y, b.y, 1e-13);
    EXPECT_NEAR(a.x, c.x, 1e-13);
    EXPECT_NEAR(a.y, c.y, 1e-13);
}

TEST(PhiPsi, PropertyRoundTrip)
{
    Gen gen(16);
    for (int i = 0; i < 10'000; ++i) {
        const auto params = gen.params();
        const double theta = gen.angle();
        const Point2 u{std::cos(theta), std::sin(theta)};
        const Point2 back = psi(params, phi(params, u));
        ASSERT_NEAR(back.x, u.x, 1e-12);
        ASSERT_NEAR(back.y, u.y, 1e-12);

        const Point2 c = boundaryPoint(params, theta);
        const Point2 again = phi(params, psi(params, c));
        const double s = std::max(params.a(), params.b()) * 1e-12;
        ASSERT_NEAR(again.x, c.x, s);
        ASSERT_NEAR(again.y, c.y, s);
    }
}

TEST(PowAbsDelta, MatchesDirectDifference)
{
    Gen gen(17);
    for (int i = 0; i < 5000; ++i) {
        const double p = gen.uniform(1.2, 8.0);
        const double x = gen.uniform(-1.0, 1.0);
        const double dx = gen.uniform(-0.5, 0.5);
        const double direct = detail::powAbs(x + dx, p) - detail::powAbs(x, p);
        EXPECT_NEAR(detail::powAbsDelta(x, dx, p), direct, 1e-14 * std::max(1.0, detail::powAbs(x + dx, p)));
    }
    // Tiny steps keep their relative accuracy.
    const double d = detail::powAbsDelta(0.7, 1e-13, 4.0);
    EXPECT_NEAR(d / (4.0 * std::pow(0.7, 3.0) * 1e-13), 1.0, 1e-6);
}
