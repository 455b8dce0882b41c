#pragma once
// Seeded generators and brute-force references shared by the test binaries.

#include <lame/lame.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace lame::testing {

class Gen
{
  public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    std::uint64_t integer(std::uint64_t lo, std::uint64_t hi)
    {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
    }
    double angle() { return uniform(0.0, kTwoPi); }

    SuperellipseParams params(double pLo = 1.2, double pHi = 8.0, double axisLo = 0.5, double axisHi = 10.0)
    {
        return {uniform(axisLo, axisHi), uniform(axisLo, axisHi), uniform(pLo, pHi)};
    }

    /// Point outside the disk at radius factor in (1 + margin, maxFactor) times the boundary point.
    Point2 exterior(const SuperellipseParams &params, double maxFactor, double margin = 1e-3)
    {
        const double theta = angle();
        return boundaryPoint(params, theta) * uniform(1.0 + margin, maxFactor);
    }

    /// Exterior point at Euclidean distance up to `reach` times max(a, b).
    Point2 exteriorFar(const SuperellipseParams &params, double reach)
    {
        for (;;) {
            const double r = uniform(0.0, reach * std::max(params.a(), params.b()));
            const double t = angle();
            const Point2 q{r * std::cos(t), r * std::sin(t)};
            if (constraintValue(params, q) > 1.0 + 1e-6)
                return q;
        }
    }

    /// Point outside the polygon Q (but possibly inside the disk).
    Point2 outsidePolygon(const PolygonSpec &spec, double maxFactor)
    {
        for (;;) {
            const Point2 q = boundaryPoint(spec.params(), angle()) * uniform(0.9, maxFactor);
            if (!halfspaceMembership(spec, q, 1e-9).inside)
                return q;
        }
    }

    std::mt19937_64 &engine() { return rng_; }

  private:
    std::mt19937_64 rng_;
};

struct BruteProjection
{
    Point2 point;
    double distance = std::numeric_limits<double>::infinity();
};

/// Nearest point of the polygon boundary by scanning every edge.
[[nodiscard]] inline BruteProjection bruteProjectOntoBoundary(const PolygonSpec &spec, const Point2 &q)
{
    BruteProjection best;
    for (std::uint64_t t = 0; t < spec.size(); ++t) {
        const auto i = static_cast<Index>(t);
        const Point2 A = spec.vertex(i);
        const Point2 B = spec.vertex(i + 1);
        const Point2 d = B - A;
        const double s = std::clamp(dot(q - A, d) / norm2(d), 0.0, 1.0);
        const Point2 c = A + s * d;
        const double dist = distance(q, c);
        if (dist < best.distance)
            best = {c, dist};
    }
    return best;
}

/// Dense polyline sample of the curve; used as a crude independent reference.
[[nodiscard]] inline double bruteDistanceToCurve(const SuperellipseParams &params, const Point2 &q, int n)
{
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        best = std::min(best, distance(q, boundaryPoint(params, kTwoPi * i / n)));
    return best;
}

} // namespace lame::testing
