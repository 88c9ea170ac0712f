#include "ntau/svg.hpp"

#include <cstdio>
#include <sstream>

namespace ntau {

namespace {

struct Mapper {
    mpz_class min_x, min_y, max_x, max_y;
    double scale = 1.0;
    double margin = 48.0;
    double height = 480.0;

    void include(const LatticePoint& p, bool first) {
        if (first) {
            min_x = max_x = p.x;
            min_y = max_y = p.y;
            return;
        }
        if (p.x < min_x) min_x = p.x;
        if (p.x > max_x) max_x = p.x;
        if (p.y < min_y) min_y = p.y;
        if (p.y > max_y) max_y = p.y;
    }

    void finish(double width, double h) {
        height = h;
        const double span_x = mpz_class(max_x - min_x).get_d();
        const double span_y = mpz_class(max_y - min_y).get_d();
        const double span = std::max({span_x, span_y, 1.0});
        scale = (std::min(width, h) - 2 * margin) / span;
    }

    // SVG y grows downward; lattice y grows upward.
    std::pair<double, double> map(const LatticePoint& p) const {
        const double dx = mpz_class(p.x - min_x).get_d();
        const double dy = mpz_class(p.y - min_y).get_d();
        return {margin + dx * scale, height - margin - dy * scale};
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace

std::string svg_plot(const PointSet& points, const std::vector<ConvexPolygon>& polygons,
                     int width, int height) {
    Mapper m;
    bool first = true;
    for (const auto& p : points) {
        m.include(p, first);
        first = false;
    }
    for (const auto& poly : polygons)
        for (const auto& v : poly.vertices()) {
            m.include(v, first);
            first = false;
        }
    if (first) m.include(LatticePoint(0, 0), true);
    m.finish(width, height);

    static const char* kFills[] = {"#2d8a4e", "#2a5fb4", "#b4502a", "#7a2ab4"};
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
        << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    std::size_t color = 0;
    for (const auto& poly : polygons) {
        const auto& verts = poly.vertices();
        if (verts.empty()) continue;
        const char* fill = kFills[color++ % 4];
        if (verts.size() == 1) {
            auto [x, y] = m.map(verts[0]);
            out << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
                << "\" r=\"5\" fill=\"none\" stroke=\"" << fill << "\"/>\n";
        } else {
            out << "  <polygon points=\"";
            for (std::size_t i = 0; i < verts.size(); ++i) {
                auto [x, y] = m.map(verts[i]);
                if (i) out << ' ';
                out << fmt(x) << ',' << fmt(y);
            }
            out << "\" fill=\"" << fill << "\" fill-opacity=\"0.15\" stroke=\"" << fill
                << "\" stroke-width=\"1.5\"/>\n";
        }
        for (const auto& v : verts) {
            auto [x, y] = m.map(v);
            out << "  <text x=\"" << fmt(x + 6) << "\" y=\"" << fmt(y - 6)
                << "\" font-size=\"11\" font-family=\"monospace\" fill=\"" << fill
                << "\">" << to_string(v) << "</text>\n";
        }
    }

    for (const auto& p : points) {
        auto [x, y] = m.map(p);
        out << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
            << "\" r=\"3\" fill=\"#c03030\"/>\n";
    }

    out << "</svg>\n";
    return out.str();
}

} // namespace ntau
