#pragma once
/**
 * @file superellipse.hpp
 * @brief The Lamé curve |x/a|^p + |y/b|^p = 1, its weighted p-norm and the
 *        radial homeomorphism between the unit circle and the curve.
 */

#include "lame/error.hpp"
#include "lame/point.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace lame {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Numerical tolerances shared by the library. Defaults are tuned for binary64.
struct Tolerances
{
    double boundary = 1e-9;   ///< |s - 1| band treated as the curve, s = constraint value
    double unit = 1e-9;       ///< | ||u||_2 - 1 | accepted by phi
    double curve = 1e-9;      ///< | ||q||_p - 1 | accepted by psi
    double roundtrip = 1e-9;  ///< phi/psi round-trip slack
    double halfspace = 1e-9;  ///< <a_t, q> - b_t accepted as inside
    double region = 1e-9;     ///< slack on region inequalities, in units of the squared edge length
    double segment = 1e-12;   ///< segment parameter slack for snapping to an endpoint
};

/// Semi-axes and order of a superellipse. Invariant: a > 0, b > 0, p > 1.
class SuperellipseParams
{
  public:
    SuperellipseParams(double a, double b, double p) : a_(a), b_(b), p_(p)
    {
        if (!(std::isfinite(a) && a > 0.0))
            throw InvalidArgument("semi-axis a must be finite and > 0, got " + std::to_string(a));
        if (!(std::isfinite(b) && b > 0.0))
            throw InvalidArgument("semi-axis b must be finite and > 0, got " + std::to_string(b));
        if (!(std::isfinite(p) && p > 1.0))
            throw InvalidArgument("order p must be finite and > 1, got " + std::to_string(p));
    }

    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] double b() const noexcept { return b_; }
    [[nodiscard]] double p() const noexcept { return p_; }

    friend bool operator==(const SuperellipseParams &, const SuperellipseParams &) = default;

  private:
    double a_;
    double b_;
    double p_;
};

namespace detail {

/// |v|^p as exp(p ln|v|), with 0^p = 0.
[[nodiscard]] inline double powAbs(double v, double p) noexcept
{
    const double m = std::fabs(v);
    if (m == 0.0)
        return 0.0;
    return std::exp(p * std::log(m));
}

/// |x + dx|^p - |x|^p, accurate for small dx when x + dx keeps the sign of x.
[[nodiscard]] inline double powAbsDelta(double x, double dx, double p) noexcept
{
    const double x2 = x + dx;
    if (x == 0.0 || x2 == 0.0 || (x > 0.0) != (x2 > 0.0))
        return powAbs(x2, p) - powAbs(x, p);
    return powAbs(x, p) * std::expm1(p * std::log1p(dx / x));
}

[[nodiscard]] inline Point2 unitVector(double theta) noexcept { return {std::cos(theta), std::sin(theta)}; }

} // namespace detail

/// s(q) = (|x|/a)^p + (|y|/b)^p; the disk is s <= 1.
[[nodiscard]] inline double constraintValue(const SuperellipseParams &params, const Point2 &q) noexcept
{
    return detail::powAbs(q.x / params.a(), params.p()) + detail::powAbs(q.y / params.b(), params.p());
}

/// (|x/a|^p + |y/b|^p)^(1/p), evaluated with the larger term factored out.
[[nodiscard]] inline double weightedPNorm(const SuperellipseParams &params, const Point2 &q) noexcept
{
    const double u = std::fabs(q.x) / params.a();
    const double v = std::fabs(q.y) / params.b();
    const double m = std::max(u, v);
    if (m == 0.0)
        return 0.0;
    const double r = std::min(u, v) / m;
    return m * std::exp(std::log1p(detail::powAbs(r, params.p())) / params.p());
}

enum class DiskMembership
{
    StrictInterior,
    Boundary,
    Exterior,
};

[[nodiscard]] inline DiskMembership diskMembership(const SuperellipseParams &params, const Point2 &q,
                                                   double tolBoundary = Tolerances{}.boundary) noexcept
{
    const double s = constraintValue(params, q);
    if (s < 1.0 - tolBoundary)
        return DiskMembership::StrictInterior;
    if (s > 1.0 + tolBoundary)
        return DiskMembership::Exterior;
    return DiskMembership::Boundary;
}

/// True for StrictInterior and Boundary.
[[nodiscard]] inline bool inDisk(const SuperellipseParams &params, const Point2 &q,
                                 double tolBoundary = Tolerances{}.boundary) noexcept
{
    return diskMembership(params, q, tolBoundary) != DiskMembership::Exterior;
}

/// Radial homeomorphism from the unit circle onto the curve: u / ||u||_p.
[[nodiscard]] inline Point2 phi(const SuperellipseParams &params, const Point2 &u, double epsUnit = Tolerances{}.unit)
{
    if (!isFinite(u) || std::fabs(norm(u) - 1.0) > epsUnit)
        throw GeometryError("phi: argument is not on the unit circle");
    return u / weightedPNorm(params, u);
}

/// Inverse of phi: q / ||q||_2 for q on the curve.
[[nodiscard]] inline Point2 psi(const SuperellipseParams &params, const Point2 &q, double epsCurve = Tolerances{}.curve)
{
    if (!isFinite(q) || std::fabs(weightedPNorm(params, q) - 1.0) > epsCurve)
        throw GeometryError("psi: argument is not on the superellipse");
    return q / norm(q);
}

/// gamma(theta) = phi(cos theta, sin theta); 2*pi periodic.
[[nodiscard]] inline Point2 boundaryPoint(const SuperellipseParams &params, double theta) noexcept
{
    double r = theta;
    if (!(r >= 0.0 && r < kTwoPi)) {
        r = std::fmod(theta, kTwoPi);
        if (r < 0.0)
            r += kTwoPi;
    }
    const Point2 u = detail::unitVector(r);
    return u / weightedPNorm(params, u);
}

} // namespace lame
