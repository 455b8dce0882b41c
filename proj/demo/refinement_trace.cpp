// Projects (3.75, 4) onto x^4/225 + y^4/25 <= 1, whose exact projection is
// (3, 2), and prints every iterate of the polygon refinement with its error.

#include <lame/lame.hpp>

#include <cmath>
#include <cstdio>

int main()
{
    const lame::SuperellipseParams params(std::sqrt(15.0), std::sqrt(5.0), 4.0);
    const lame::Point2 query{3.75, 4.0};
    const lame::Point2 exact{3.0, 2.0};

    const auto trace = lame::project(params, query);
    const auto errors = lame::absoluteErrors(trace, exact);
    std::printf("%4s %16s %16s %16s %14s\n", "n", "k", "x", "y", "error");
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto &s = trace.steps[i];
        std::printf("%4d %16llu %16.10f %16.10f %14.3e\n", s.n, static_cast<unsigned long long>(s.k), s.point.x,
                    s.point.y, errors[i]);
    }
    std::printf("stop: %s\n", lame::toString(trace.stopReason).data());
}
