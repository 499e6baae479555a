#include "heawood/render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace heawood {

namespace {

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    return s == "-0.000" ? "0.000" : s;
}

} // namespace

std::string render_svg(const EmbeddingCandidate& e, const IncidenceStructure& inc, const RenderStyle& style)
{
    if (!(style.scale > 0))
        throw std::invalid_argument("render_svg: scale must be positive");

    std::array<double, kVertexCount> xs{};
    std::array<double, kVertexCount> ys{};
    double xmin = std::numeric_limits<double>::infinity();
    double ymin = xmin;
    double xmax = -xmin;
    double ymax = -xmin;
    for (const VertexLabel v : all_vertices()) {
        xs[v.id()] = e[v].x().to_double();
        ys[v.id()] = e[v].y().to_double();
        xmin = std::min(xmin, xs[v.id()]);
        xmax = std::max(xmax, xs[v.id()]);
        ymin = std::min(ymin, ys[v.id()]);
        ymax = std::max(ymax, ys[v.id()]);
    }
    xmin -= style.padding;
    ymin -= style.padding;
    xmax += style.padding;
    ymax += style.padding;

    const double width = (xmax - xmin) * style.scale;
    const double height = (ymax - ymin) * style.scale;
    auto px = [&](double x) { return (x - xmin) * style.scale; };
    auto py = [&](double y) { return (ymax - y) * style.scale; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width) << "\" height=\""
        << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "  <g stroke=\"" << style.edge_color << "\" stroke-width=\"1.5\">\n";
    for (const Flag& f : inc.flags()) {
        const int a = f.point_label().id();
        const int b = f.line_label().id();
        out << "    <line data-flag=\"" << f.point_label().name() << '-' << f.line_label().name() << "\" x1=\""
            << fmt(px(xs[a])) << "\" y1=\"" << fmt(py(ys[a])) << "\" x2=\"" << fmt(px(xs[b])) << "\" y2=\""
            << fmt(py(ys[b])) << "\"/>\n";
    }
    out << "  </g>\n"
        << "  <g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (const VertexLabel v : all_vertices()) {
        const double cx = px(xs[v.id()]);
        const double cy = py(ys[v.id()]);
        const std::string& color = v.kind == VertexKind::Point ? style.point_color : style.line_color;
        out << "    <circle data-vertex=\"" << v.name() << "\" cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy)
            << "\" r=\"" << fmt(style.vertex_radius) << "\" fill=\"" << color << "\"/>\n"
            << "    <text x=\"" << fmt(cx + style.label_offset) << "\" y=\"" << fmt(cy - style.label_offset)
            << "\">" << v.name() << "</text>\n";
    }
    out << "  </g>\n"
        << "</svg>\n";
    return out.str();
}

} // namespace heawood
