#pragma once
/**
 * @file regions.hpp
 * @brief Preimages of the metric projection onto the inscribed polygon Q.
 *
 * Outside Q the plane splits into rectangular semistrips above each edge
 * (projection lands in the open edge) and affine normal cones at each vertex
 * (projection lands on the vertex). Each region is an intersection of a few
 * half-planes; classify() finds the one containing a query point.
 */

#include "lame/polygon.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>

namespace lame {

enum class RegionKind
{
    InteriorOfQ,
    FacetPreimage,
    VertexPreimage,
};

struct RegionId
{
    RegionKind kind = RegionKind::InteriorOfQ;
    std::uint64_t index = 0;  ///< edge or vertex index mod k; 0 for the interior

    [[nodiscard]] static RegionId interior() noexcept { return {RegionKind::InteriorOfQ, 0}; }
    [[nodiscard]] static RegionId facet(std::uint64_t t) noexcept { return {RegionKind::FacetPreimage, t}; }
    [[nodiscard]] static RegionId vertex(std::uint64_t t) noexcept { return {RegionKind::VertexPreimage, t}; }

    friend bool operator==(const RegionId &, const RegionId &) = default;
};

inline std::ostream &operator<<(std::ostream &os, const RegionId &r)
{
    switch (r.kind) {
    case RegionKind::InteriorOfQ: return os << "interior";
    case RegionKind::FacetPreimage: return os << "facet(" << r.index << ')';
    case RegionKind::VertexPreimage: return os << "vertex(" << r.index << ')';
    }
    return os;
}

// ---------------------------------------------------------------------------
// Closed-form projections
// ---------------------------------------------------------------------------

/// Orthogonal projection onto the line <normal, x> = offset.
[[nodiscard]] inline Point2 projectOntoSupportLine(const SupportLine &line, const Point2 &q) noexcept
{
    return q - (residual(line, q) / norm2(line.normal)) * line.normal;
}

enum class SegmentLocation
{
    InteriorOfSegment,
    EndpointA,
    EndpointB,
};

struct SegmentProjection
{
    Point2 point;
    SegmentLocation location;
    double parameter;  ///< unclamped s, with the foot of the perpendicular at A + s (B - A)
};

/// Nearest point of the closed segment [A, B]. Endpoint results are returned
/// as the exact endpoint, so they compare equal to polygon vertices.
[[nodiscard]] inline SegmentProjection projectOntoSegment(const Point2 &A, const Point2 &B, const Point2 &q,
                                                          double tolSegment = Tolerances{}.segment)
{
    const Point2 d = B - A;
    const double len2 = norm2(d);
    if (!(std::sqrt(len2) >= 1e-14))
        throw DegenerateSegment("projectOntoSegment: endpoints coincide");
    const double s = dot(q - A, d) / len2;
    if (s <= tolSegment)
        return {A, SegmentLocation::EndpointA, s};
    if (s >= 1.0 - tolSegment)
        return {B, SegmentLocation::EndpointB, s};
    return {A + s * d, SegmentLocation::InteriorOfSegment, s};
}

// ---------------------------------------------------------------------------
// Region systems
// ---------------------------------------------------------------------------
//
// Every inequality is divided by the squared length of its edge, so the
// slack is measured in edge-parameter units and keeps its meaning as k grows.
// A positive slack widens each region (used to classify), a negative slack
// shrinks it (used to certify that no point lies in two regions).

namespace detail {

/// Parameters of q's foot on the lines of edges t-1 and t, both measured from
/// P_t: `before` is 0 at P_t and -1 at P_{t-1}, `after` is 0 at P_t and 1 at P_{t+1}.
struct VertexFrame
{
    double before;
    double after;
};

[[nodiscard]] inline VertexFrame vertexFrame(const PolygonSpec &spec, Index t, const Point2 &q) noexcept
{
    const Point2 u = q - spec.vertex(t);
    const Point2 prev = spec.edgeVector(t - 1);
    const Point2 next = spec.edgeVector(t);
    return {dot(u, prev) / norm2(prev), dot(u, next) / norm2(next)};
}

} // namespace detail

/// Triangular region of vertex t: q lies behind P_t along edge t and ahead of
/// P_t along edge t-1.
[[nodiscard]] inline bool vertexSystemHolds(const PolygonSpec &spec, Index t, const Point2 &q, double slack) noexcept
{
    const auto f = detail::vertexFrame(spec, t, q);
    return f.after <= slack && f.before >= -slack;
}

/// Rectangular region of edge t: q is outside the support line and its foot
/// falls strictly inside the edge.
[[nodiscard]] inline bool facetSystemHolds(const PolygonSpec &spec, Index t, const Point2 &q, double slack) noexcept
{
    const Point2 u = q - spec.vertex(t);
    const Point2 e = spec.edgeVector(t);
    const double len2 = norm2(e);
    const double outside = (u.x * e.y - u.y * e.x) / len2;
    const double s = dot(u, e) / len2;
    return outside >= -slack && s > -slack && s < 1.0 + slack;
}

/// Number of region systems satisfied by q after shrinking every region by
/// `slack`. A partition gives at most one for exterior points.
[[nodiscard]] inline std::size_t countStrictMatches(const PolygonSpec &spec, const Point2 &q, double slack)
{
    std::size_t n = 0;
    for (std::uint64_t t = 0; t < spec.size(); ++t) {
        const auto i = static_cast<Index>(t);
        n += vertexSystemHolds(spec, i, q, -slack) ? 1 : 0;
        n += facetSystemHolds(spec, i, q, -slack) ? 1 : 0;
    }
    return n;
}

/// Polygon sizes up to this value are classified by scanning every region.
inline constexpr std::uint64_t kFullScanLimit = 64;

namespace detail {

/// Edge whose angular sector (between the rays through P_t and P_{t+1}) contains q.
[[nodiscard]] inline Index sectorIndex(const PolygonSpec &spec, const Point2 &q) noexcept
{
    double ang = std::atan2(q.y, q.x);
    if (ang < 0.0)
        ang += kTwoPi;
    const auto k = static_cast<double>(spec.size());
    const auto t = static_cast<Index>(std::floor(ang / kTwoPi * k));
    return static_cast<Index>(spec.wrap(t));
}

/// Vertex near the point of the curve whose outward normal points along q.
[[nodiscard]] inline Index normalGuessIndex(const PolygonSpec &spec, const Point2 &q) noexcept
{
    const double p = spec.params().p();
    const double n = norm(q);
    const double ux = std::fabs(q.x) / n;
    const double uy = std::fabs(q.y) / n;
    // |x| ~ (|u_x| a^p)^(1/(p-1)), in logs to avoid overflow for p close to 1.
    const double lx = ux > 0.0 ? (std::log(ux) + p * std::log(spec.params().a())) / (p - 1.0) : -HUGE_VAL;
    const double ly = uy > 0.0 ? (std::log(uy) + p * std::log(spec.params().b())) / (p - 1.0) : -HUGE_VAL;
    const double m = std::max(lx, ly);
    const double x = std::copysign(std::exp(lx - m), q.x);
    const double y = std::copysign(std::exp(ly - m), q.y);
    return sectorIndex(spec, {x, y});
}

/// Walks vertex by vertex towards the region of an exterior q. Returns a
/// matching region or nothing when the walk hits the far side or runs out of steps.
[[nodiscard]] inline std::optional<RegionId> walkToRegion(const PolygonSpec &spec, const Point2 &q, Index start,
                                                          double slack, int maxSteps)
{
    Index t = start;
    for (int step = 0; step < maxSteps; ++step) {
        if (vertexSystemHolds(spec, t, q, slack))
            return RegionId::vertex(spec.wrap(t));
        if (facetSystemHolds(spec, t, q, slack))
            return RegionId::facet(spec.wrap(t));
        if (facetSystemHolds(spec, t - 1, q, slack))
            return RegionId::facet(spec.wrap(t - 1));
        const auto f = vertexFrame(spec, t, q);
        const bool ahead = f.after >= 1.0;
        const bool behind = f.before <= -1.0;
        if (ahead == behind)
            return std::nullopt;
        t += ahead ? 1 : -1;
    }
    return std::nullopt;
}

/// Applies the scan tie-break (vertices first, then lowest index) to the
/// regions around a walk result.
[[nodiscard]] inline RegionId canonicalNeighbour(const PolygonSpec &spec, const Point2 &q, RegionId found,
                                                 double slack)
{
    const auto c = static_cast<Index>(found.index);
    std::array<Index, 3> around{c - 1, c, c + 1};
    std::array<std::uint64_t, 3> wrapped{};
    std::transform(around.begin(), around.end(), wrapped.begin(), [&](Index i) { return spec.wrap(i); });
    std::sort(wrapped.begin(), wrapped.end());
    for (auto t : wrapped)
        if (vertexSystemHolds(spec, static_cast<Index>(t), q, slack))
            return RegionId::vertex(t);
    for (auto t : wrapped)
        if (facetSystemHolds(spec, static_cast<Index>(t), q, slack))
            return RegionId::facet(t);
    return found;
}

} // namespace detail

/// Classifies q by scanning every region system: vertex regions first, then
/// facets, lowest index first. O(k).
[[nodiscard]] inline RegionId classifyFullScan(const PolygonSpec &spec, const Point2 &q, const Tolerances &tol = {})
{
    if (halfspaceMembership(spec, q, tol.halfspace).inside)
        return RegionId::interior();
    for (std::uint64_t t = 0; t < spec.size(); ++t)
        if (vertexSystemHolds(spec, static_cast<Index>(t), q, tol.region))
            return RegionId::vertex(t);
    for (std::uint64_t t = 0; t < spec.size(); ++t)
        if (facetSystemHolds(spec, static_cast<Index>(t), q, tol.region))
            return RegionId::facet(t);
    throw NoRegionMatched("no region system accepted the exterior point (" + std::to_string(q.x) + ", " +
                          std::to_string(q.y) + ") for k = " + std::to_string(spec.size()));
}

/// Region of the partition of the plane containing q. Points on the boundary
/// of Q count as interior.
///
/// For k above kFullScanLimit the interior test uses only the edge of q's
/// angular sector, and the region is found by a short walk from two starting
/// guesses, falling back to the full scan if both walks give up.
[[nodiscard]] inline RegionId classify(const PolygonSpec &spec, const Point2 &q, const Tolerances &tol = {})
{
    if (!isFinite(q))
        throw GeometryError("classify: query point is not finite");
    if (spec.size() <= kFullScanLimit)
        return classifyFullScan(spec, q, tol);

    // Q is the union of the triangles (0, P_t, P_{t+1}), so only the sector edge can separate q from Q.
    const Index sector = detail::sectorIndex(spec, q);
    if (residual(spec.supportLine(sector), q) <= tol.halfspace)
        return RegionId::interior();

    constexpr int kMaxWalk = 64;
    for (Index start : {sector, detail::normalGuessIndex(spec, q)})
        if (auto found = detail::walkToRegion(spec, q, start, tol.region, kMaxWalk))
            return detail::canonicalNeighbour(spec, q, *found, tol.region);
    return classifyFullScan(spec, q, tol);
}

struct PolygonProjection
{
    Point2 point;
    RegionId region;
};

/// Metric projection onto Q = conv(P_{p,k}) through the region of q.
[[nodiscard]] inline PolygonProjection projectOntoPolygon(const PolygonSpec &spec, const Point2 &q,
                                                          const Tolerances &tol = {})
{
    const RegionId region = classify(spec, q, tol);
    switch (region.kind) {
    case RegionKind::InteriorOfQ: return {q, region};
    case RegionKind::VertexPreimage: return {spec.vertex(static_cast<Index>(region.index)), region};
    case RegionKind::FacetPreimage:
        return {projectOntoSupportLine(spec.supportLine(static_cast<Index>(region.index)), q), region};
    }
    return {q, region};
}

} // namespace lame
