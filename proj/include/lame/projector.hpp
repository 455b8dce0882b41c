#pragma once
/**
 * @file projector.hpp
 * @brief Metric projection onto a superelliptic disk by polygon doubling.
 *
 * The query is first projected onto the inscribed polygon with k0 vertices.
 * Each refinement doubles the vertex count; old vertex m becomes new vertex
 * 2m, so only the two new edges around the previous locus can carry the new
 * projection:
 *
 *   on edge m    ->  edges [2m, 2m+1] and [2m+1, 2m+2]
 *   at vertex m  ->  edges [2m-1, 2m] and [2m, 2m+1]
 *
 * Each step touches O(1) vertices, so precision is bought in O(log(1/tol))
 * doublings.
 */

#include "lame/regions.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lame {

enum class LocusKind
{
    Interior,  ///< query inside the disk; no polygon involved
    OnEdge,
    AtVertex,
};

struct Locus
{
    LocusKind kind = LocusKind::Interior;
    std::uint64_t index = 0;

    friend bool operator==(const Locus &, const Locus &) = default;
};

/// One iterate x^n on the polygon with k vertices.
struct TraceStep
{
    int n = 1;
    std::uint64_t k = 0;  ///< 0 for the interior short-circuit
    Locus locus;
    Point2 point;
};

enum class StopReason
{
    ToleranceMet,
    MaxRefinementsReached,
    KMaxReached,
};

[[nodiscard]] inline std::string_view toString(StopReason r) noexcept
{
    switch (r) {
    case StopReason::ToleranceMet: return "tolerance_met";
    case StopReason::MaxRefinementsReached: return "max_refinements_reached";
    case StopReason::KMaxReached: return "k_max_reached";
    }
    return "unknown";
}

struct ProjectionTrace
{
    Point2 query;
    std::vector<TraceStep> steps;
    bool converged = false;
    StopReason stopReason = StopReason::ToleranceMet;

    [[nodiscard]] bool inside() const noexcept { return steps.size() == 1 && steps.front().locus.kind == LocusKind::Interior; }
    [[nodiscard]] const Point2 &result() const { return steps.back().point; }
};

struct ProjectorConfig
{
    std::uint64_t k0 = 6;
    double tol = 1e-10;  ///< step size and local edge length that end the refinement
    int maxRefine = 60;  ///< maximum number of iterates, including x^1
    Tolerances tolerances{};
};

inline void validate(const ProjectorConfig &cfg)
{
    if (cfg.k0 < 3 || cfg.k0 > kMaxVertices)
        throw InvalidConfig("k0 must lie in [3, 2^48], got " + std::to_string(cfg.k0));
    if (!(std::isfinite(cfg.tol) && cfg.tol > 0.0))
        throw InvalidConfig("tol must be finite and > 0");
    if (cfg.maxRefine < 1)
        throw InvalidConfig("max_refine must be >= 1, got " + std::to_string(cfg.maxRefine));
}

/// Iterate on the doubled polygon.
struct Refinement
{
    std::uint64_t k;
    Locus locus;
    Point2 point;
};

namespace detail {

[[nodiscard]] inline Locus locusFromSegment(const PolygonSpec &spec, Index edge, SegmentLocation where) noexcept
{
    switch (where) {
    case SegmentLocation::InteriorOfSegment: return {LocusKind::OnEdge, spec.wrap(edge)};
    case SegmentLocation::EndpointA: return {LocusKind::AtVertex, spec.wrap(edge)};
    case SegmentLocation::EndpointB: return {LocusKind::AtVertex, spec.wrap(edge + 1)};
    }
    return {};
}

/// Longest polygon edge touching the locus.
[[nodiscard]] inline double localEdgeLength(const PolygonSpec &spec, const Locus &locus) noexcept
{
    const auto m = static_cast<Index>(locus.index);
    const double next = norm(spec.edgeVector(m));
    if (locus.kind != LocusKind::AtVertex)
        return next;
    return std::max(next, norm(spec.edgeVector(m - 1)));
}

/// Nearest edge by brute force; only used when the initial projection lands on
/// the polygon boundary of a point that lies outside the disk.
[[nodiscard]] inline Refinement nearestEdge(const PolygonSpec &spec, const Point2 &q, const Tolerances &tol)
{
    Refinement best{spec.size(), {}, {}};
    double bestDist = HUGE_VAL;
    for (std::uint64_t t = 0; t < spec.size(); ++t) {
        const auto i = static_cast<Index>(t);
        const auto sp = projectOntoSegment(spec.vertex(i), spec.vertex(i + 1), q, tol.segment);
        const double d = distance(sp.point, q);
        if (d < bestDist) {
            bestDist = d;
            best = {spec.size(), locusFromSegment(spec, i, sp.location), sp.point};
        }
    }
    return best;
}

} // namespace detail

/// One doubling step: projects q onto the two edges of P_{p,2k} that replace
/// the current locus on P_{p,k} and keeps the closer one. When both give the
/// same point the shared vertex wins.
///
/// The two edges meet at a shared vertex M. Rather than comparing two nearly
/// equal distances, the closer edge is read off q's foot parameters on both
/// edge lines measured from M: if neither foot passes M the answer is M,
/// otherwise it lies on the edge whose foot passes M. (A foot past M on both
/// sides means q is outside at most one of the two lines, and that edge wins.)
[[nodiscard]] inline Refinement refine(const SuperellipseParams &params, std::uint64_t k, const Locus &locus,
                                       const Point2 &q, const Tolerances &tol = {})
{
    if (locus.kind == LocusKind::Interior)
        throw InvalidArgument("refine: an interior locus has no edges to refine");
    if (k > kMaxVertices / 2)
        throw InvalidArgument("refine: doubling " + std::to_string(k) + " vertices exceeds 2^48");
    const PolygonSpec fine(params, 2 * k);
    const Index m2 = 2 * static_cast<Index>(locus.index);
    const Index shared = locus.kind == LocusKind::OnEdge ? m2 + 1 : m2;

    const Point2 M = fine.vertex(shared);
    const Point2 u = q - M;
    const Point2 e1 = fine.edgeVector(shared - 1);
    const Point2 e2 = fine.edgeVector(shared);
    const double s1 = dot(u, e1) / norm2(e1);  // -1 at the far end of edge 1, 0 at M
    const double s2 = dot(u, e2) / norm2(e2);  // 0 at M, 1 at the far end of edge 2
    const bool pastM1 = s1 < -tol.segment;
    const bool pastM2 = s2 > tol.segment;

    bool useFirst = pastM1;
    if (pastM1 && pastM2) {
        const double out1 = (u.x * e1.y - u.y * e1.x) / norm(e1);
        const double out2 = (u.x * e2.y - u.y * e2.x) / norm(e2);
        useFirst = out1 >= out2;
    } else if (!pastM1 && !pastM2) {
        return {fine.size(), {LocusKind::AtVertex, fine.wrap(shared)}, M};
    }

    if (useFirst) {
        if (s1 <= -1.0 + tol.segment)
            return {fine.size(), {LocusKind::AtVertex, fine.wrap(shared - 1)}, fine.vertex(shared - 1)};
        return {fine.size(), {LocusKind::OnEdge, fine.wrap(shared - 1)}, M + s1 * e1};
    }
    if (s2 >= 1.0 - tol.segment)
        return {fine.size(), {LocusKind::AtVertex, fine.wrap(shared + 1)}, fine.vertex(shared + 1)};
    return {fine.size(), {LocusKind::OnEdge, fine.wrap(shared)}, M + s2 * e2};
}

/// Projects q onto the disk |x/a|^p + |y/b|^p <= 1 and records every iterate.
///
/// Points of the disk are returned unchanged in a single step. Otherwise the
/// refinement stops once two consecutive steps moved by less than cfg.tol and
/// the polygon edges at the current locus are shorter than cfg.tol; a vertex
/// iterate can legitimately repeat over several doublings, so a small step on
/// its own does not mean convergence.
[[nodiscard]] inline ProjectionTrace project(const SuperellipseParams &params, const Point2 &q,
                                             const ProjectorConfig &cfg = {})
{
    validate(cfg);
    if (!isFinite(q))
        throw GeometryError("project: query point is not finite");

    ProjectionTrace trace;
    trace.query = q;
    if (inDisk(params, q, cfg.tolerances.boundary)) {
        trace.steps.push_back({1, 0, {}, q});
        trace.converged = true;
        trace.stopReason = StopReason::ToleranceMet;
        return trace;
    }

    const PolygonSpec initial(params, cfg.k0);
    Refinement state{cfg.k0, {}, {}};
    const PolygonProjection first = projectOntoPolygon(initial, q, cfg.tolerances);
    switch (first.region.kind) {
    case RegionKind::FacetPreimage: state = {cfg.k0, {LocusKind::OnEdge, first.region.index}, first.point}; break;
    case RegionKind::VertexPreimage: state = {cfg.k0, {LocusKind::AtVertex, first.region.index}, first.point}; break;
    case RegionKind::InteriorOfQ: state = detail::nearestEdge(initial, q, cfg.tolerances); break;
    }
    trace.steps.push_back({1, state.k, state.locus, state.point});

    int smallSteps = 0;
    for (int n = 2;; ++n) {
        if (n > cfg.maxRefine) {
            trace.stopReason = StopReason::MaxRefinementsReached;
            break;
        }
        if (state.k > kMaxVertices / 2) {
            trace.stopReason = StopReason::KMaxReached;
            break;
        }
        const Refinement next = refine(params, state.k, state.locus, q, cfg.tolerances);
        const double moved = distance(next.point, state.point);
        state = next;
        trace.steps.push_back({n, state.k, state.locus, state.point});

        smallSteps = moved < cfg.tol ? smallSteps + 1 : 0;
        if (smallSteps >= 2 && detail::localEdgeLength(PolygonSpec(params, state.k), state.locus) < cfg.tol) {
            trace.converged = true;
            trace.stopReason = StopReason::ToleranceMet;
            break;
        }
    }
    return trace;
}

/// ||x^n - reference||_2 for every iterate, in order.
[[nodiscard]] inline std::vector<double> absoluteErrors(const ProjectionTrace &trace, const Point2 &reference)
{
    std::vector<double> out;
    out.reserve(trace.steps.size());
    for (const auto &s : trace.steps)
        out.push_back(distance(s.point, reference));
    return out;
}

} // namespace lame
