#pragma once
/**
 * @file polygon.hpp
 * @brief Inscribed polygon whose vertices are the images of the k-th roots of
 *        unity under the radial homeomorphism, and its half-space form.
 *
 * Vertices are evaluated on demand from (k, t); nothing of size k is stored,
 * so the refinement can run at polygon sizes far beyond memory.
 */

#include "lame/superellipse.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace lame {

using Index = std::int64_t;

/// Largest supported vertex count. Beyond it adjacent vertex angles stop being
/// resolvable in binary64.
inline constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << 48;

/// Edge t carries the half-space <normal, x> <= offset with both endpoints on the line.
struct SupportLine
{
    Point2 normal;  ///< outward, equals the edge vector rotated clockwise
    double offset;  ///< > 0 since the origin is interior
    std::uint64_t index;
};

class PolygonSpec
{
  public:
    PolygonSpec(SuperellipseParams params, std::uint64_t k) : params_(params), k_(k)
    {
        if (k < 3 || k > kMaxVertices)
            throw InvalidArgument("vertex count must lie in [3, 2^48], got " + std::to_string(k));
    }

    [[nodiscard]] const SuperellipseParams &params() const noexcept { return params_; }
    [[nodiscard]] std::uint64_t size() const noexcept { return k_; }

    /// t mod k, for any signed t.
    [[nodiscard]] std::uint64_t wrap(Index t) const noexcept
    {
        const auto k = static_cast<Index>(k_);
        Index r = t % k;
        if (r < 0)
            r += k;
        return static_cast<std::uint64_t>(r);
    }

    /// Angle 2*pi*(t mod k)/k of the root of unity behind vertex t.
    [[nodiscard]] double angle(Index t) const noexcept
    {
        return kTwoPi * static_cast<double>(wrap(t)) / static_cast<double>(k_);
    }

    /// ||xi^t||_p, the weighted norm of the t-th root of unity.
    [[nodiscard]] double rootNorm(Index t) const noexcept
    {
        return weightedPNorm(params_, detail::unitVector(angle(t)));
    }

    [[nodiscard]] Point2 vertex(Index t) const noexcept
    {
        const Point2 u = detail::unitVector(angle(t));
        return u / weightedPNorm(params_, u);
    }

    /// P_{t+1} - P_t without cancellation.
    ///
    /// Subtracting two computed vertices loses the edge direction once the edge
    /// is short (absolute error ~1e-16 over a length that shrinks like 1/k).
    /// Here every difference (of the unit vectors, of the powers, of the norms)
    /// is formed in closed form, so the result keeps full relative accuracy.
    [[nodiscard]] Point2 edgeVector(Index t) const noexcept
    {
        const double step = kTwoPi / static_cast<double>(k_);
        const double theta = angle(t);
        const double mid = theta + 0.5 * step;
        const double chord = 2.0 * std::sin(0.5 * step);
        const Point2 u1 = detail::unitVector(theta);
        const Point2 du{-chord * std::sin(mid), chord * std::cos(mid)};

        const double p = params_.p();
        const double x1 = u1.x / params_.a();
        const double y1 = u1.y / params_.b();
        const double s1 = detail::powAbs(x1, p) + detail::powAbs(y1, p);
        const double ds = detail::powAbsDelta(x1, du.x / params_.a(), p) + detail::powAbsDelta(y1, du.y / params_.b(), p);
        const double n1 = std::exp(std::log(s1) / p);
        const double dn = n1 * std::expm1(std::log1p(ds / s1) / p);
        const double n2 = n1 + dn;
        return (n1 * du - dn * u1) / (n1 * n2);
    }

    /// Support line of edge [P_t, P_{t+1}]: the normal is the edge vector
    /// (y_{t+1} - y_t, -(x_{t+1} - x_t)) and the offset sin(2 pi / k) / (||xi^t||_p ||xi^{t+1}||_p).
    [[nodiscard]] SupportLine supportLine(Index t) const noexcept
    {
        const Point2 e = edgeVector(t);
        const double offset = std::sin(kTwoPi / static_cast<double>(k_)) / (rootNorm(t) * rootNorm(t + 1));
        return {{e.y, -e.x}, offset, wrap(t)};
    }

    friend bool operator==(const PolygonSpec &, const PolygonSpec &) = default;

  private:
    SuperellipseParams params_;
    std::uint64_t k_;
};

/// Signed algebraic residual <normal, q> - offset; positive means q violates the half-space.
[[nodiscard]] inline double residual(const SupportLine &line, const Point2 &q) noexcept
{
    return dot(line.normal, q) - line.offset;
}

struct HalfspaceMembership
{
    bool inside = true;
    std::vector<std::uint64_t> violated;  ///< ascending edge indices with residual > tolerance
};

/// Scans all k support lines. Boundary points count as inside.
[[nodiscard]] inline HalfspaceMembership halfspaceMembership(const PolygonSpec &spec, const Point2 &q,
                                                             double tolHalfspace = Tolerances{}.halfspace)
{
    HalfspaceMembership out;
    for (std::uint64_t t = 0; t < spec.size(); ++t)
        if (residual(spec.supportLine(static_cast<Index>(t)), q) > tolHalfspace)
            out.violated.push_back(t);
    out.inside = out.violated.empty();
    return out;
}

} // namespace lame
