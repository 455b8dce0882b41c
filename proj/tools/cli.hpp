#pragma once
/**
 * @file cli.hpp
 * @brief Subcommands of the `lame` tool.
 *
 * Everything is reachable through run(), which takes the argument vector and
 * the two output streams, so the commands can be exercised in-process.
 *
 * Exit status: 0 success, 1 runtime failure (no region matched, I/O error),
 * 2 usage error (bad flags or out-of-range values).
 */

#include <lame/lame.hpp>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace lame::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Largest polygon the `polygon` command dumps in full.
inline constexpr std::uint64_t kMaxDumpVertices = std::uint64_t{1} << 20;
/// Largest polygon the `plot` command draws.
inline constexpr std::uint64_t kMaxPlotVertices = std::uint64_t{1} << 14;

/// Flags shared by all commands plus the per-command ones. Values are
/// validated before any computation.
struct RunConfig
{
    double a = 0.0;
    double b = 0.0;
    double p = 0.0;

    std::optional<double> x;
    std::optional<double> y;
    std::uint64_t k0 = 6;
    double tol = 1e-10;
    int maxRefine = 60;
    std::string pointsFile;

    std::optional<double> referenceX;
    std::optional<double> referenceY;
    int steps = 10;

    std::uint64_t k = 0;
    std::int64_t samples = 10'000;
    std::string out;
};

/// Raised for flag values that parse but fall outside their range.
class UsageError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

namespace detail {

[[nodiscard]] inline json point(const Point2 &p) { return json::array({p.x, p.y}); }

[[nodiscard]] inline json locusJson(const Locus &l)
{
    switch (l.kind) {
    case LocusKind::OnEdge: return {{"type", "edge"}, {"index", l.index}};
    case LocusKind::AtVertex: return {{"type", "vertex"}, {"index", l.index}};
    case LocusKind::Interior: break;
    }
    return {{"type", "interior"}};
}

[[nodiscard]] inline json regionJson(const RegionId &r)
{
    switch (r.kind) {
    case RegionKind::FacetPreimage: return {{"type", "facet"}, {"index", r.index}};
    case RegionKind::VertexPreimage: return {{"type", "vertex"}, {"index", r.index}};
    case RegionKind::InteriorOfQ: break;
    }
    return {{"type", "interior"}};
}

[[nodiscard]] inline json traceJson(const ProjectionTrace &trace)
{
    json steps = json::array();
    for (const auto &s : trace.steps)
        steps.push_back({{"n", s.n}, {"k", s.k}, {"point", point(s.point)}, {"locus", locusJson(s.locus)}});
    return {
        {"query", point(trace.query)},
        {"projection", point(trace.result())},
        {"inside", trace.inside()},
        {"converged", trace.converged},
        {"iterations", trace.steps.size()},
        {"k_final", trace.steps.back().k},
        {"stop_reason", std::string(toString(trace.stopReason))},
        {"trace", std::move(steps)},
    };
}

[[nodiscard]] inline SuperellipseParams params(const RunConfig &cfg)
{
    try {
        return {cfg.a, cfg.b, cfg.p};
    } catch (const InvalidArgument &e) {
        throw UsageError(e.what());
    }
}

[[nodiscard]] inline ProjectorConfig projectorConfig(const RunConfig &cfg)
{
    ProjectorConfig pc;
    pc.k0 = cfg.k0;
    pc.tol = cfg.tol;
    pc.maxRefine = cfg.maxRefine;
    try {
        validate(pc);
    } catch (const InvalidConfig &e) {
        throw UsageError(e.what());
    }
    return pc;
}

[[nodiscard]] inline Point2 query(const RunConfig &cfg)
{
    if (!cfg.x || !cfg.y)
        throw UsageError("--x and --y are required");
    const Point2 q{*cfg.x, *cfg.y};
    if (!isFinite(q))
        throw UsageError("query coordinates must be finite");
    return q;
}

[[nodiscard]] inline PolygonSpec polygon(const RunConfig &cfg, std::uint64_t limit)
{
    if (cfg.k < 3 || cfg.k > limit)
        throw UsageError(fmt::format("--k must lie in [3, {}], got {}", limit, cfg.k));
    return {params(cfg), cfg.k};
}

/// Reads a CSV with columns x,y. A first line that does not parse as numbers is taken as the header.
[[nodiscard]] inline std::vector<Point2> readPoints(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open points file '" + path + "'");
    std::vector<Point2> pts;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos)
            continue;
        std::istringstream row(line);
        row.imbue(std::locale::classic());
        Point2 q;
        char comma = 0;
        if (!(row >> q.x >> comma >> q.y) || comma != ',') {
            if (first) {
                first = false;
                continue;
            }
            throw UsageError("malformed row in points file: '" + line + "'");
        }
        first = false;
        if (!isFinite(q))
            throw UsageError("non-finite point in points file");
        pts.push_back(q);
    }
    return pts;
}

[[nodiscard]] inline std::string fixed10(double v) { return fmt::format("{:.10f}", v); }

} // namespace detail

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

/// Projection JSON, or an array of them for --points-file.
inline int cmdProject(const RunConfig &cfg, std::ostream &out)
{
    const auto params = detail::params(cfg);
    const auto pc = detail::projectorConfig(cfg);
    if (!cfg.pointsFile.empty()) {
        if (cfg.x || cfg.y)
            throw UsageError("--points-file cannot be combined with --x/--y");
        json all = json::array();
        for (const Point2 &q : detail::readPoints(cfg.pointsFile))
            all.push_back(detail::traceJson(project(params, q, pc)));
        out << all.dump() << '\n';
        return kExitOk;
    }
    out << detail::traceJson(project(params, detail::query(cfg), pc)).dump() << '\n';
    return kExitOk;
}

/// CSV `n,k,x,y[,abs_error]` with 10 decimals.
inline int cmdTrace(const RunConfig &cfg, std::ostream &out)
{
    const auto params = detail::params(cfg);
    const auto pc = detail::projectorConfig(cfg);
    if (cfg.referenceX.has_value() != cfg.referenceY.has_value())
        throw UsageError("--reference-x and --reference-y must be given together");
    if (cfg.steps < 0)
        throw UsageError("--steps must be >= 0");
    const Point2 q = detail::query(cfg);
    const bool withError = cfg.referenceX.has_value();

    out << (withError ? "n,k,x,y,abs_error\n" : "n,k,x,y\n");
    if (cfg.steps == 0)
        return kExitOk;
    const auto trace = project(params, q, pc);
    const Point2 ref = withError ? Point2{*cfg.referenceX, *cfg.referenceY} : Point2{};
    const auto rows = std::min<std::size_t>(trace.steps.size(), static_cast<std::size_t>(cfg.steps));
    for (std::size_t i = 0; i < rows; ++i) {
        const auto &s = trace.steps[i];
        out << s.n << ',' << s.k << ',' << detail::fixed10(s.point.x) << ',' << detail::fixed10(s.point.y);
        if (withError)
            out << ',' << detail::fixed10(distance(s.point, ref));
        out << '\n';
    }
    return kExitOk;
}

inline int cmdPolygon(const RunConfig &cfg, std::ostream &out)
{
    const auto spec = detail::polygon(cfg, kMaxDumpVertices);
    json vertices = json::array();
    json lines = json::array();
    for (std::uint64_t t = 0; t < spec.size(); ++t) {
        const auto i = static_cast<Index>(t);
        vertices.push_back(detail::point(spec.vertex(i)));
        const auto line = spec.supportLine(i);
        lines.push_back({{"a", detail::point(line.normal)}, {"b", line.offset}});
    }
    out << json{{"k", spec.size()}, {"vertices", std::move(vertices)}, {"support_lines", std::move(lines)}}.dump()
        << '\n';
    return kExitOk;
}

inline int cmdRegions(const RunConfig &cfg, std::ostream &out)
{
    const auto spec = detail::polygon(cfg, kMaxVertices);
    const auto proj = projectOntoPolygon(spec, detail::query(cfg));
    out << json{{"region", detail::regionJson(proj.region)}, {"projection", detail::point(proj.point)}}.dump()
        << '\n';
    return kExitOk;
}

inline int cmdHausdorff(const RunConfig &cfg, std::ostream &out)
{
    const auto spec = detail::polygon(cfg, kMaxVertices);
    if (cfg.samples < 1)
        throw UsageError("--samples must be >= 1");
    out << json{{"k", spec.size()},
                {"samples", cfg.samples},
                {"estimate", hausdorffEstimate(spec, cfg.samples)},
                {"max_chord", maxChord(spec)}}
               .dump()
        << '\n';
    return kExitOk;
}

/// Standalone SVG of the curve, polygon, region boundaries, query and iterates.
/// Deterministic for fixed inputs.
[[nodiscard]] inline std::string renderSvg(const PolygonSpec &spec, const Point2 &q, const ProjectionTrace &trace)
{
    const auto &params = spec.params();
    const double extent = std::max({params.a(), params.b(), std::fabs(q.x), std::fabs(q.y)}) * 1.15;
    const double ray = 0.35 * extent;
    const double px = 800.0 / (2.0 * extent);  // px per unit
    const auto X = [&](double x) { return fmt::format("{:.4f}", (x + extent) * px); };
    const auto Y = [&](double y) { return fmt::format("{:.4f}", (extent - y) * px); };
    const auto pts = [&](const Point2 &p) { return X(p.x) + "," + Y(p.y); };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    svg += fmt::format("<title>superellipse a={} b={} p={}, k={}</title>\n", params.a(), params.b(), params.p(),
                       spec.size());
    svg += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";

    svg += "<polyline id=\"curve\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    constexpr int kCurveSamples = 1024;
    for (int i = 0; i <= kCurveSamples; ++i) {
        if (i)
            svg += ' ';
        svg += pts(boundaryPoint(params, kTwoPi * (i % kCurveSamples) / kCurveSamples));
    }
    svg += "\"/>\n";

    svg += "<g id=\"region-boundaries\" stroke=\"#aaaaaa\" stroke-width=\"0.8\" stroke-dasharray=\"4 3\">\n";
    for (std::uint64_t t = 0; t < spec.size(); ++t) {
        const auto i = static_cast<Index>(t);
        const Point2 v = spec.vertex(i);
        for (Index e : {i - 1, i}) {
            const auto n = spec.supportLine(e).normal;
            const Point2 end = v + (ray / norm(n)) * n;
            svg += fmt::format("<line class=\"region-boundary\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n", X(v.x),
                               Y(v.y), X(end.x), Y(end.y));
        }
    }
    svg += "</g>\n";

    svg += "<polygon id=\"polygon\" fill=\"none\" stroke=\"black\" stroke-width=\"1.2\" points=\"";
    for (std::uint64_t t = 0; t < spec.size(); ++t) {
        if (t)
            svg += ' ';
        svg += pts(spec.vertex(static_cast<Index>(t)));
    }
    svg += "\"/>\n";
    for (std::uint64_t t = 0; t < spec.size(); ++t) {
        const Point2 v = spec.vertex(static_cast<Index>(t));
        svg += fmt::format("<circle class=\"vertex\" cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"black\"/>\n", X(v.x), Y(v.y));
    }

    svg += fmt::format("<circle class=\"query\" cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"#d62728\"/>\n", X(q.x), Y(q.y));
    for (const auto &s : trace.steps) {
        svg += fmt::format("<circle class=\"iterate\" data-n=\"{}\" cx=\"{}\" cy=\"{}\" r=\"2.5\" fill=\"#2ca02c\"/>\n",
                           s.n, X(s.point.x), Y(s.point.y));
        svg += fmt::format("<line class=\"projection-segment\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" "
                           "stroke=\"#2ca02c\" stroke-width=\"0.5\"/>\n",
                           X(q.x), Y(q.y), X(s.point.x), Y(s.point.y));
    }
    svg += "</svg>\n";
    return svg;
}

/// Writes through a temporary sibling file and renames it, so a failure never
/// leaves a partial file at the destination.
inline void writeFileAtomically(const std::string &path, const std::string &content)
{
    namespace fs = std::filesystem;
    const fs::path dest(path);
    if (path.empty() || dest.filename().empty())
        throw std::runtime_error("invalid output path '" + path + "'");
    fs::path tmp = dest;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        f << content;
        f.flush();
        if (!f) {
            f.close();
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error("write to '" + tmp.string() + "' failed");
        }
    }
    std::error_code ec;
    fs::rename(tmp, dest, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw std::runtime_error("cannot move output into place at '" + path + "'");
    }
}

inline int cmdPlot(const RunConfig &cfg, std::ostream &out)
{
    const auto spec = detail::polygon(cfg, kMaxPlotVertices);
    const Point2 q = detail::query(cfg);
    if (cfg.out.empty())
        throw UsageError("--out is required");
    auto pc = detail::projectorConfig(cfg);
    pc.k0 = spec.size();
    const auto trace = project(spec.params(), q, pc);
    writeFileAtomically(cfg.out, renderSvg(spec, q, trace));
    out << json{{"written", cfg.out}, {"vertices", spec.size()}, {"iterates", trace.steps.size()}}.dump() << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

/// Parses `args` (args[0] is the program name) and runs one subcommand.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    RunConfig cfg;
    CLI::App app{"Metric projection onto superelliptic disks |x/a|^p + |y/b|^p <= 1", "lame"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "Flag-default override file (key=value lines; subcommand keys as project.k0=...)");
    app.add_option("--a", cfg.a, "Semi-axis along x (> 0)")->required();
    app.add_option("--b", cfg.b, "Semi-axis along y (> 0)")->required();
    app.add_option("--p", cfg.p, "Order (> 1)")->required();

    const auto addQuery = [&](CLI::App *sub) {
        sub->add_option("--x", cfg.x, "Query x");
        sub->add_option("--y", cfg.y, "Query y");
    };
    const auto addProjector = [&](CLI::App *sub) {
        sub->add_option("--k0", cfg.k0, "Initial vertex count (>= 3)")->capture_default_str();
        sub->add_option("--tol", cfg.tol, "Step and edge-length tolerance (> 0)")->capture_default_str();
        sub->add_option("--max-refine", cfg.maxRefine, "Maximum number of iterates")->capture_default_str();
    };

    auto *project = app.add_subcommand("project", "Project a point (or a CSV of points) onto the disk; JSON output");
    addQuery(project);
    addProjector(project);
    project->add_option("--points-file", cfg.pointsFile, "CSV with columns x,y");

    auto *trace = app.add_subcommand("trace", "Iterate table as CSV: n,k,x,y[,abs_error]");
    addQuery(trace);
    addProjector(trace);
    trace->add_option("--reference-x", cfg.referenceX, "Reference point x for the error column");
    trace->add_option("--reference-y", cfg.referenceY, "Reference point y for the error column");
    trace->add_option("--steps", cfg.steps, "Number of rows")->capture_default_str();

    auto *polygon = app.add_subcommand("polygon", "Vertices and support lines of the inscribed polygon; JSON output");
    polygon->add_option("--k", cfg.k, "Vertex count")->required();

    auto *regions = app.add_subcommand("regions", "Projection region of a point for the k-gon; JSON output");
    regions->add_option("--k", cfg.k, "Vertex count")->required();
    addQuery(regions);

    auto *hausdorff = app.add_subcommand("hausdorff", "Sampled Hausdorff distance and longest chord; JSON output");
    hausdorff->add_option("--k", cfg.k, "Vertex count")->required();
    hausdorff->add_option("--samples", cfg.samples, "Samples per set")->capture_default_str();

    auto *plot = app.add_subcommand("plot", "SVG of curve, polygon, regions, query and iterates");
    plot->add_option("--k", cfg.k, "Vertex count (also the initial polygon of the projection)")->required();
    addQuery(plot);
    plot->add_option("--tol", cfg.tol, "Step and edge-length tolerance (> 0)")->capture_default_str();
    plot->add_option("--max-refine", cfg.maxRefine, "Maximum number of iterates")->capture_default_str();
    plot->add_option("--out", cfg.out, "Output SVG path")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty())
        rev.pop_back();  // program name
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (project->parsed())
            return cmdProject(cfg, out);
        if (trace->parsed())
            return cmdTrace(cfg, out);
        if (polygon->parsed())
            return cmdPolygon(cfg, out);
        if (regions->parsed())
            return cmdRegions(cfg, out);
        if (hausdorff->parsed())
            return cmdHausdorff(cfg, out);
        if (plot->parsed())
            return cmdPlot(cfg, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidArgument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NoRegionMatched &e) {
        err << "internal error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

} // namespace lame::cli
