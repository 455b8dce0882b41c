// Builds the inscribed polygons of x^4/625 + y^4/81 = 1 for a few sizes and
// reports which projection region a handful of points fall into.

#include <lame/lame.hpp>

#include <iostream>

int main()
{
    const lame::SuperellipseParams params(5.0, 3.0, 4.0);
    for (std::uint64_t k : {3u, 4u, 8u}) {
        const lame::PolygonSpec spec(params, k);
        std::cout << "k = " << k << '\n';
        for (std::uint64_t t = 0; t < k; ++t) {
            const auto line = spec.supportLine(static_cast<lame::Index>(t));
            std::cout << "  P" << t << " = " << spec.vertex(static_cast<lame::Index>(t)) << "  edge: " << line.normal
                      << " . x <= " << line.offset << '\n';
        }
        for (lame::Point2 q : {lame::Point2{0, 0}, lame::Point2{5, 3}, lame::Point2{10, 0}, lame::Point2{-6, 1}}) {
            const auto proj = lame::projectOntoPolygon(spec, q);
            std::cout << "  " << q << " -> " << proj.point << " in " << proj.region << '\n';
        }
    }
}
