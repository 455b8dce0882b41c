#pragma once

#include <cmath>
#include <ostream>

namespace lame {

/// A point (or vector) of the Euclidean plane.
struct Point2
{
    double x = 0.0;
    double y = 0.0;

    constexpr Point2 &operator+=(const Point2 &o) noexcept
    {
        x += o.x;
        y += o.y;
        return *this;
    }
    constexpr Point2 &operator-=(const Point2 &o) noexcept
    {
        x -= o.x;
        y -= o.y;
        return *this;
    }

    friend constexpr bool operator==(const Point2 &, const Point2 &) = default;
};

[[nodiscard]] constexpr Point2 operator+(Point2 a, const Point2 &b) noexcept { return a += b; }
[[nodiscard]] constexpr Point2 operator-(Point2 a, const Point2 &b) noexcept { return a -= b; }
[[nodiscard]] constexpr Point2 operator-(const Point2 &a) noexcept { return {-a.x, -a.y}; }
[[nodiscard]] constexpr Point2 operator*(double s, const Point2 &a) noexcept { return {s * a.x, s * a.y}; }
[[nodiscard]] constexpr Point2 operator*(const Point2 &a, double s) noexcept { return {s * a.x, s * a.y}; }
[[nodiscard]] constexpr Point2 operator/(const Point2 &a, double s) noexcept { return {a.x / s, a.y / s}; }

[[nodiscard]] constexpr double dot(const Point2 &a, const Point2 &b) noexcept { return a.x * b.x + a.y * b.y; }
[[nodiscard]] constexpr double norm2(const Point2 &a) noexcept { return dot(a, a); }
[[nodiscard]] inline double norm(const Point2 &a) noexcept { return std::hypot(a.x, a.y); }
[[nodiscard]] inline double distance(const Point2 &a, const Point2 &b) noexcept { return norm(a - b); }
[[nodiscard]] inline bool isFinite(const Point2 &a) noexcept { return std::isfinite(a.x) && std::isfinite(a.y); }

inline std::ostream &operator<<(std::ostream &os, const Point2 &p) { return os << '(' << p.x << ", " << p.y << ')'; }

} // namespace lame
