#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace lame;
using lame::testing::Gen;

namespace {

const SuperellipseParams kP534{5.0, 3.0, 4.0};

} // namespace

TEST(OracleProject, WorkedExample)
{
    const SuperellipseParams params{std::sqrt(15.0), std::sqrt(5.0), 4.0};
    const auto r = oracleProject(params, {3.75, 4.0});
    EXPECT_LT(distance(r.point, {3.0, 2.0}), 1e-10);
    EXPECT_NEAR(r.distance, 2.136000936329382792, 1e-10);
    EXPECT_EQ(r.samples, 1'000'000);
    EXPECT_EQ(boundaryPoint(params, r.theta), r.point);
}

TEST(OracleProject, StrictInteriorBypassesSearch)
{
    const auto r = oracleProject(kP534, {1.0, -1.0});
    EXPECT_EQ(r.point, (Point2{1.0, -1.0}));
    EXPECT_EQ(r.samples, 0);
    EXPECT_EQ(r.distance, 0.0);
    EXPECT_NEAR(r.theta, 2 * std::numbers::pi - std::numbers::pi / 4, 1e-15);
}

TEST(OracleProject, RejectsBadInput)
{
    EXPECT_THROW((void)oracleProject(kP534, {std::nan(""), 1.0}), GeometryError);
    EXPECT_THROW((void)oracleProject(kP534, {10.0, 10.0}, 2), InvalidArgument);
}

TEST(OracleProject, CircleMatchesClosedForm)
{
    Gen gen(51);
    for (int i = 0; i < 20; ++i) {
        const double a = gen.uniform(0.5, 10.0);
        const SuperellipseParams circle{a, a, 2.0};
        const Point2 q = gen.exteriorFar(circle, 50.0);
        EXPECT_LT(distance(oracleProject(circle, q, 20'000).point, (a / norm(q)) * q), 1e-9);
    }
}

TEST(OracleProject, PropertyVariationalInequalityCertificate)
{
    Gen gen(52);
    for (int i = 0; i < 20; ++i) {
        const auto params = gen.params();
        const Point2 q = gen.exteriorFar(params, 50.0);
        const Point2 x = oracleProject(params, q, 20'000).point;
        for (int j = 0; j < 1000; ++j) {
            const Point2 y = boundaryPoint(params, kTwoPi * j / 1000.0);
            ASSERT_LE(dot(y - x, q - x), 1e-8);
        }
    }
}

TEST(OracleProject, PropertyGridDoublingIsStable)
{
    Gen gen(53);
    for (int i = 0; i < 20; ++i) {
        const auto params = gen.params();
        const Point2 q = gen.exteriorFar(params, 50.0);
        const Point2 coarse = oracleProject(params, q, 50'000).point;
        const Point2 fine = oracleProject(params, q, 100'000).point;
        EXPECT_LT(distance(coarse, fine), 1e-10) << q;
    }
}

TEST(OracleProject, PropertyAgreesWithProjector)
{
    Gen gen(54);
    for (int i = 0; i < 30; ++i) {
        const auto params = gen.params();
        const Point2 q = gen.exteriorFar(params, 100.0);
        EXPECT_LT(distance(oracleProject(params, q, 50'000).point, project(params, q).result()), 1e-9) << q;
    }
}

TEST(MaxChord, SquareEdge)
{
    EXPECT_NEAR(maxChord(PolygonSpec(kP534, 4)), std::sqrt(34.0), 1e-14);
}

TEST(MaxChord, PropertyBoundsAndHalving)
{
    Gen gen(55);
    for (int i = 0; i < 100; ++i) {
        const auto params = gen.params();
        const std::uint64_t k = gen.integer(3, 2000);
        const PolygonSpec spec(params, k);
        const double c = maxChord(spec);
        for (std::uint64_t t = 0; t < k; ++t)
            ASSERT_LE(distance(spec.vertex(static_cast<Index>(t)), spec.vertex(static_cast<Index>(t) + 1)), c);
        // Each coarse edge splits into two finer ones, each shorter than it by the triangle inequality.
        EXPECT_LE(maxChord(PolygonSpec(params, 2 * k)), c);
    }
}

TEST(HausdorffEstimate, FrozenValues)
{
    EXPECT_NEAR(hausdorffEstimate(PolygonSpec(kP534, 4)), 1.75389759, 1e-6);
    EXPECT_NEAR(hausdorffEstimate(PolygonSpec(kP534, 8)), 0.95571178, 1e-6);
    EXPECT_NEAR(hausdorffEstimate(PolygonSpec(kP534, 16)), 0.24948364, 1e-6);
}

TEST(HausdorffEstimate, CircleClosedForm)
{
    // Gap between a circle of radius a and its inscribed regular k-gon: a (1 - cos(pi / k)).
    for (const double a : {0.5, 2.0, 7.0})
        for (const std::uint64_t k : {3u, 16u, 100u}) {
            const SuperellipseParams circle{a, a, 2.0};
            EXPECT_NEAR(hausdorffEstimate(PolygonSpec(circle, k), 2000), a * (1 - std::cos(std::numbers::pi / k)),
                        1e-9 * a)
                << a << ' ' << k;
        }
    EXPECT_NEAR(hausdorffEstimate(PolygonSpec({2.0, 2.0, 2.0}, 16)), 0.03842943919353914, 1e-12);
}

TEST(HausdorffEstimate, RejectsNonPositiveSamples)
{
    EXPECT_THROW((void)hausdorffEstimate(PolygonSpec(kP534, 8), 0), InvalidArgument);
}

TEST(HausdorffEstimate, PropertyDecreasesUnderDoubling)
{
    Gen gen(56);
    for (int i = 0; i < 5; ++i) {
        const auto params = gen.params();
        double prev = HUGE_VAL;
        for (std::uint64_t k = 8; k <= 1024; k *= 2) {
            const double h = hausdorffEstimate(PolygonSpec(params, k), 2000);
            EXPECT_LE(h, prev * 1.05);
            EXPECT_LE(h, maxChord(PolygonSpec(params, k)));
            prev = h;
        }
    }
}
