#include "bkcoord/svg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "bkcoord/compaction.hpp"

namespace bkcoord {

namespace {

struct Point {
    double x;
    double y;
    auto operator<=>(const Point&) const = default;
};

std::string num(double value) {
    std::ostringstream out;
    out.precision(10);
    out << value + 0.0;
    return out.str();
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

double cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Andrew's monotone chain, counter-clockwise.
std::vector<Point> convex_hull(std::vector<Point> points) {
    std::ranges::sort(points);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 3) return points;
    std::vector<Point> hull(2 * points.size());
    std::size_t k = 0;
    for (const auto& p : points) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = points.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);
    return hull;
}

}  // namespace

std::string render_svg(const LayeredGraph& graph, const CoordinateAssignment& coords,
                       const SvgOptions& options) {
    const double unit = options.unit;
    const double radius = unit * 0.2;
    const double margin = unit;
    auto center = [&](Vertex v) {
        return Point{coords.x[v] * unit, static_cast<double>(graph.layer_index(v) + 1) * unit};
    };

    double min_x = std::numeric_limits<double>::infinity();
    double max_x = -min_x;
    double min_y = min_x;
    double max_y = -min_x;
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
        const Point p = center(v);
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    if (graph.vertex_count() == 0) min_x = max_x = min_y = max_y = 0.0;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
        << num(min_x - margin) << ' ' << num(min_y - margin) << ' '
        << num(max_x - min_x + 2 * margin) << ' ' << num(max_y - min_y + 2 * margin) << "\">\n";

    if (options.overlays && graph.vertex_count() > 0) {
        const LayeredGraph canonical = mirror(graph, options.overlay_orientation);
        const BlockStructure blocks = vertical_align_canonical(canonical);
        const CompactionState state = place_blocks(canonical, blocks);

        svg << "  <g class=\"classes\" fill=\"#c8e6c9\" fill-opacity=\"0.5\" stroke=\"#2e7d32\">\n";
        std::vector<std::vector<Point>> class_points(graph.vertex_count());
        for (Vertex v = 0; v < graph.vertex_count(); ++v) {
            const Point c = center(v);
            const double pad = radius * 2;
            auto& pts = class_points[state.sink[v]];
            for (double dx : {-pad, pad}) {
                for (double dy : {-pad, pad}) pts.push_back({c.x + dx, c.y + dy});
            }
        }
        for (std::size_t i = 0; i < canonical.layer_count(); ++i) {
            for (Vertex s : canonical.layer(i)) {
                if (state.sink[s] != s) continue;
                svg << "    <polygon class=\"class-hull\" data-sink=\"" << escape(graph.id(s))
                    << "\" points=\"";
                bool first = true;
                for (const auto& p : convex_hull(class_points[s])) {
                    svg << (first ? "" : " ") << num(p.x) << ',' << num(p.y);
                    first = false;
                }
                svg << "\"/>\n";
            }
        }
        svg << "  </g>\n";

        svg << "  <g class=\"blocks\" fill=\"#e3f2fd\" stroke=\"#90caf9\">\n";
        for (Vertex r = 0; r < graph.vertex_count(); ++r) {
            if (blocks.root[r] != r) continue;
            double top = std::numeric_limits<double>::infinity();
            double bottom = -top;
            for (Vertex w : blocks.members(r)) {
                top = std::min(top, center(w).y);
                bottom = std::max(bottom, center(w).y);
            }
            const double pad = radius * 1.5;
            svg << "    <rect class=\"block\" x=\"" << num(center(r).x - pad) << "\" y=\""
                << num(top - pad) << "\" width=\"" << num(2 * pad) << "\" height=\""
                << num(bottom - top + 2 * pad) << "\" rx=\"" << num(pad) << "\"/>\n";
        }
        svg << "  </g>\n";
    }

    svg << "  <g class=\"edges\" stroke=\"#424242\" stroke-width=\"1.5\">\n";
    for (const auto& [u, w] : graph.edges()) {
        const Point a = center(u);
        const Point b = center(w);
        svg << "    <line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x)
            << "\" y2=\"" << num(b.y) << "\"/>\n";
    }
    svg << "  </g>\n";

    svg << "  <g class=\"vertices\">\n";
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
        const Point c = center(v);
        if (graph.is_dummy(v)) {
            svg << "    <circle class=\"dummy\" cx=\"" << num(c.x) << "\" cy=\"" << num(c.y)
                << "\" r=\"" << num(radius * 0.3) << "\" fill=\"#424242\"><title>"
                << escape(graph.id(v)) << "</title></circle>\n";
        } else {
            svg << "    <circle class=\"vertex\" cx=\"" << num(c.x) << "\" cy=\"" << num(c.y)
                << "\" r=\"" << num(radius) << "\" fill=\"#ffffff\" stroke=\"#000000\"><title>"
                << escape(graph.id(v)) << "</title></circle>\n";
        }
    }
    svg << "  </g>\n</svg>\n";
    return svg.str();
}

}  // namespace bkcoord
