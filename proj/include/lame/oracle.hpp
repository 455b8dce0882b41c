#pragma once
/**
 * @file oracle.hpp
 * @brief Brute-force reference projection and convergence diagnostics.
 *
 * Nothing here touches the region machinery or the refinement driver: the
 * oracle only evaluates the boundary parameterization gamma(theta), so it can
 * serve as an independent check on them.
 */

#include "lame/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace lame {

struct OracleResult
{
    Point2 point;
    double theta = 0.0;     ///< point == boundaryPoint(theta)
    double distance = 0.0;  ///< ||q - point||
    std::int64_t samples = 0;
};

namespace detail {

/// gamma(theta2) - gamma(theta1) in extended precision, formed from closed-form
/// differences so that short chords keep their direction.
struct ChordEnds
{
    long double x1, y1, dx, dy;
};

[[nodiscard]] inline ChordEnds chord(const SuperellipseParams &params, double theta1, double theta2) noexcept
{
    using L = long double;
    const L p = params.p();
    const L t1 = theta1;
    const L h = L(theta2) - t1;
    const L c1 = std::cos(t1), s1 = std::sin(t1);
    const L m = t1 + h / 2, w = 2 * std::sin(h / 2);
    const L dc = -w * std::sin(m), ds = w * std::cos(m);

    // 1/N(theta) = S^(-1/p) with S = |cos/a|^p + |sin/b|^p.
    const auto term = [p](L v) { return v == 0 ? L(0) : std::exp(p * std::log(std::fabs(v))); };
    const auto termDelta = [&](L v, L dv) {
        const L v2 = v + dv;
        if (v == 0 || v2 == 0 || (v > 0) != (v2 > 0))
            return term(v2) - term(v);
        return term(v) * std::expm1(p * std::log1p(dv / v));
    };
    const L a = params.a(), b = params.b();
    const L S1 = term(c1 / a) + term(s1 / b);
    const L dS = termDelta(c1 / a, dc / a) + termDelta(s1 / b, ds / b);
    const L inv1 = std::exp(-std::log(S1) / p);
    const L dInv = inv1 * std::expm1(-std::log1p(dS / S1) / p);
    // gamma2 - gamma1 = (u1 + du)(inv1 + dInv) - u1 inv1
    return {c1 * inv1, s1 * inv1, dc * (inv1 + dInv) + c1 * dInv, ds * (inv1 + dInv) + s1 * dInv};
}

/// Sign of ||q - gamma(t1)||^2 - ||q - gamma(t2)||^2, written as
/// (g2 - g1) . (2q - g1 - g2) with the chord g2 - g1 formed directly.
[[nodiscard]] inline long double compareDistances(const SuperellipseParams &params, const Point2 &q, double t1,
                                                  double t2) noexcept
{
    const ChordEnds c = chord(params, t1, t2);
    const long double sx = 2.0L * q.x - 2.0L * c.x1 - c.dx;
    const long double sy = 2.0L * q.y - 2.0L * c.y1 - c.dy;
    return c.dx * sx + c.dy * sy;
}

/// Golden-section minimisation of ||q - gamma(theta)|| on [lo, hi].
[[nodiscard]] inline double goldenSection(const SuperellipseParams &params, const Point2 &q, double lo, double hi,
                                          double width)
{
    constexpr double kInvPhi = 0.6180339887498948482;
    double c = hi - kInvPhi * (hi - lo);
    double d = lo + kInvPhi * (hi - lo);
    while (hi - lo > width && c < d) {
        if (compareDistances(params, q, c, d) < 0.0L) {
            hi = d;
            d = c;
            c = hi - kInvPhi * (hi - lo);
        } else {
            lo = c;
            c = d;
            d = lo + kInvPhi * (hi - lo);
        }
    }
    return 0.5 * (lo + hi);
}

/// Grid scan of `grid` points on [lo, hi] followed by golden section on the
/// bracket of the best sample. Ties keep the lowest index.
///
/// The scan advances (cos, sin) by rotation and re-seeds it every 1024
/// samples, so sample positions drift by far less than a grid step.
[[nodiscard]] inline double minimiseOverArc(const SuperellipseParams &params, const Point2 &q, double lo, double hi,
                                            std::int64_t grid, double width)
{
    const double step = (hi - lo) / static_cast<double>(grid);
    const double p = params.p();
    const double logA = std::log(params.a());
    const double logB = std::log(params.b());
    const double cosStep = std::cos(step);
    const double sinStep = std::sin(step);
    const auto term = [p](double v, double logScale) {
        return v == 0.0 ? 0.0 : std::exp(p * (std::log(std::fabs(v)) - logScale));
    };

    std::int64_t best = 0;
    double bestD2 = HUGE_VAL;
    double c = 0.0, s = 0.0;
    for (std::int64_t i = 0; i <= grid; ++i) {
        if (i % 1024 == 0) {
            const double theta = lo + step * static_cast<double>(i);
            c = std::cos(theta);
            s = std::sin(theta);
        }
        const double r = std::exp(-std::log(term(c, logA) + term(s, logB)) / p);
        const double d2 = norm2(q - Point2{r * c, r * s});
        if (d2 < bestD2) {
            bestD2 = d2;
            best = i;
        }
        const double next = c * cosStep - s * sinStep;
        s = s * cosStep + c * sinStep;
        c = next;
    }
    const double centre = lo + step * static_cast<double>(best);
    return goldenSection(params, q, centre - step, centre + step, width);
}

[[nodiscard]] inline double reduceAngle(double theta) noexcept
{
    double r = std::fmod(theta, kTwoPi);
    return r < 0.0 ? r + kTwoPi : r;
}

} // namespace detail

/// Reference projection of q onto the disk: the boundary point nearest to q,
/// found by a uniform grid over theta refined by golden section to width 1e-14.
///
/// Points strictly inside the disk are their own projection and bypass the
/// search; the result then has samples == 0 and theta set to q's polar angle.
[[nodiscard]] inline OracleResult oracleProject(const SuperellipseParams &params, const Point2 &q,
                                                std::int64_t grid = 1'000'000)
{
    if (!isFinite(q))
        throw GeometryError("oracleProject: query point is not finite");
    if (diskMembership(params, q) == DiskMembership::StrictInterior)
        return {q, detail::reduceAngle(std::atan2(q.y, q.x)), 0.0, 0};
    if (grid < 3)
        throw InvalidArgument("oracleProject: grid must have at least 3 samples");

    // The grid covers the full period, so the last sample duplicates the first.
    const double step = kTwoPi / static_cast<double>(grid);
    const double theta = detail::minimiseOverArc(params, q, 0.0, kTwoPi - step, grid - 1, 1e-14);
    const double reduced = detail::reduceAngle(theta);
    const Point2 point = boundaryPoint(params, reduced);
    return {point, reduced, distance(q, point), grid};
}

/// Longest edge of the polygon. Scans every edge up to 2^20 vertices and an
/// evenly strided subset of 2^20 edges beyond that.
[[nodiscard]] inline double maxChord(const PolygonSpec &spec)
{
    constexpr std::uint64_t kScanLimit = std::uint64_t{1} << 20;
    const std::uint64_t k = spec.size();
    const std::uint64_t count = std::min(k, kScanLimit);
    double best = 0.0;
    for (std::uint64_t j = 0; j < count; ++j) {
        const auto t = static_cast<Index>(k <= kScanLimit ? j : j * (k / count));
        best = std::max(best, distance(spec.vertex(t), spec.vertex(t + 1)));
    }
    return best;
}

/// Sampled Hausdorff-Pompeiu distance between the curve and the polygon.
///
/// `samples` curve points (uniform in theta) are measured against the exact
/// polygon, and about `samples` points spread over the edges (always
/// including edge midpoints) are measured against the continuous curve.
/// A diagnostic estimate, not a certified bound.
[[nodiscard]] inline double hausdorffEstimate(const PolygonSpec &spec, std::int64_t samples = 10'000)
{
    if (samples < 1)
        throw InvalidArgument("hausdorffEstimate: samples must be positive");
    const auto &params = spec.params();
    const std::uint64_t k = spec.size();
    const auto kd = static_cast<double>(k);
    const auto ns = static_cast<std::uint64_t>(samples);

    // Curve -> polygon. gamma(theta) has polar angle theta, so it sits in the
    // sector of edge floor(theta k / 2 pi); the neighbours cover rounding at sector rays.
    double curveToPolygon = 0.0;
    for (std::uint64_t j = 0; j < ns; ++j) {
        const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(ns);
        const Point2 y = boundaryPoint(params, theta);
        const auto t = static_cast<Index>(std::min<double>(std::floor(theta / kTwoPi * kd), kd - 1));
        double d = HUGE_VAL;
        for (Index e = t - 1; e <= t + 1; ++e) {
            const Point2 A = spec.vertex(e);
            const Point2 B = spec.vertex(e + 1);
            const Point2 dir = B - A;
            const double s = std::clamp(dot(y - A, dir) / norm2(dir), 0.0, 1.0);
            d = std::min(d, distance(y, A + s * dir));
        }
        curveToPolygon = std::max(curveToPolygon, d);
    }

    // Polygon -> curve. An odd count per edge keeps the midpoint, where the gap peaks.
    const std::uint64_t perEdge = 2 * (ns / (2 * k)) + 1;
    const std::uint64_t edges = std::min(k, ns);
    double polygonToCurve = 0.0;
    for (std::uint64_t j = 0; j < edges; ++j) {
        const auto t = static_cast<Index>(k <= ns ? j : j * k / edges);
        const Point2 A = spec.vertex(t);
        const Point2 B = spec.vertex(t + 1);
        const double lo = spec.angle(t) - kTwoPi / kd;
        const double hi = spec.angle(t) + 2.0 * kTwoPi / kd;
        for (std::uint64_t i = 0; i < perEdge; ++i) {
            const double s = (static_cast<double>(i) + 0.5) / static_cast<double>(perEdge);
            const Point2 x = A + s * (B - A);
            const double theta = detail::minimiseOverArc(params, x, lo, hi, 64, 1e-13);
            polygonToCurve = std::max(polygonToCurve, distance(x, boundaryPoint(params, theta)));
        }
    }
    return std::max(curveToPolygon, polygonToCurve);
}

} // namespace lame
