#include "lenscs/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace lenscs {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&')
            out += "&amp;";
        else if (c == '<')
            out += "&lt;";
        else if (c == '>')
            out += "&gt;";
        else
            out += c;
    }
    return out;
}

constexpr const char* kStyle =
    ".hull{fill:none;stroke:#1a1a1a;stroke-width:2}"
    ".edge{stroke:#888;stroke-width:1}"
    ".point-boundary{fill:#1a1a1a}"
    ".point-interior{fill:#d62728}"
    ".node{fill:#1a1a1a}"
    ".internal{stroke:#1a1a1a;stroke-width:2}"
    ".leg{stroke:#5577bb;stroke-width:2}"
    ".axis{stroke:#aaa;stroke-width:1}"
    ".cut-trivial{stroke:#1a1a1a;stroke-width:3}"
    ".cut-nontrivial{stroke:#d62728;stroke-width:3}"
    ".density{fill:none;stroke:#2a6fbb;stroke-width:1.5}"
    "text{font:12px sans-serif;fill:#1a1a1a}";

}  // namespace

std::array<double, 4> SvgScene::view_box() const {
    double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
    double hi_x = -lo_x, hi_y = -lo_y;
    auto grow = [&](double x, double y, double pad) {
        if (!std::isfinite(x) || !std::isfinite(y)) throw std::logic_error("SvgScene: non-finite coordinate");
        lo_x = std::min(lo_x, x - pad);
        hi_x = std::max(hi_x, x + pad);
        lo_y = std::min(lo_y, y - pad);
        hi_y = std::max(hi_y, y + pad);
    };
    for (const auto& p : points) grow(p.x, p.y, p.r);
    for (const auto& s : segments) {
        grow(s.x1, s.y1, s.width / 2);
        grow(s.x2, s.y2, s.width / 2);
    }
    for (const auto& pl : polylines)
        for (const auto& pt : pl.pts) grow(pt[0], pt[1], 1);
    for (const auto& l : labels) grow(l.x, l.y, 12);
    if (lo_x > hi_x) return {0, 0, 100, 100};
    const double margin = 12;
    return {lo_x - margin, lo_y - margin, (hi_x - lo_x) + 2 * margin, (hi_y - lo_y) + 2 * margin};
}

std::string SvgScene::to_xml() const {
    const auto vb = view_box();
    std::ostringstream xml;
    xml << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    xml << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(vb[0]) << ' ' << fmt(vb[1]) << ' '
        << fmt(vb[2]) << ' ' << fmt(vb[3]) << "\" width=\"" << fmt(vb[2]) << "\" height=\"" << fmt(vb[3])
        << "\">\n";
    xml << "<style>" << kStyle << "</style>\n";
    for (const auto& pl : polylines) {
        xml << (pl.closed ? "<polygon" : "<polyline") << " class=\"" << pl.klass << "\" points=\"";
        for (size_t i = 0; i < pl.pts.size(); ++i) {
            if (i) xml << ' ';
            xml << fmt(pl.pts[i][0]) << ',' << fmt(pl.pts[i][1]);
        }
        xml << "\"/>\n";
    }
    for (const auto& s : segments)
        xml << "<line class=\"" << s.klass << "\" x1=\"" << fmt(s.x1) << "\" y1=\"" << fmt(s.y1) << "\" x2=\""
            << fmt(s.x2) << "\" y2=\"" << fmt(s.y2) << "\" stroke-width=\"" << fmt(s.width) << "\"/>\n";
    for (const auto& p : points)
        xml << "<circle class=\"" << p.klass << "\" cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" r=\""
            << fmt(p.r) << "\"/>\n";
    for (const auto& l : labels)
        xml << "<text class=\"" << l.klass << "\" x=\"" << fmt(l.x) << "\" y=\"" << fmt(l.y) << "\">"
            << escape(l.text) << "</text>\n";
    xml << "</svg>\n";
    return xml.str();
}

SvgScene render_fan(const LatticeFan& fan, const Triangulation& tri) {
    constexpr double s = 40;
    auto px = [](const LatticePoint2& v) {
        return std::array<double, 2>{s * static_cast<double>(v.x), -s * static_cast<double>(v.y)};
    };
    SvgScene scene;
    for (const auto& e : tri.edges) {
        const auto a = px(tri.points[e.a]), b = px(tri.points[e.b]);
        scene.segments.push_back({a[0], a[1], b[0], b[1], 1, "edge"});
    }
    SvgScene::Polyline hull;
    hull.closed = true;
    hull.klass = "hull";
    for (const auto& v : fan.hull_vertices) hull.pts.push_back(px(v));
    scene.polylines.push_back(hull);
    const auto interior = interior_points(fan);
    auto is_interior = [&](const LatticePoint2& v) {
        return std::find(interior.begin(), interior.end(), v) != interior.end();
    };
    for (const auto& v : fan.points) {
        const auto c = px(v);
        scene.points.push_back({c[0], c[1], 4, is_interior(v) ? "point-interior" : "point-boundary"});
    }
    return scene;
}

SvgScene render_web(const PQWeb& web) {
    constexpr double s = 60;
    auto px = [](const std::array<double, 2>& v) { return std::array<double, 2>{s * v[0], -s * v[1]}; };
    SvgScene scene;
    for (const auto& [i, j] : web.internal_edges) {
        const auto a = px(web.internal_nodes[i].position), b = px(web.internal_nodes[j].position);
        scene.segments.push_back({a[0], a[1], b[0], b[1], 2, "internal"});
    }
    for (const auto& leg : web.external_legs) {
        const auto a = px(web.internal_nodes[leg.node].position), b = px(leg.tip);
        scene.segments.push_back({a[0], a[1], b[0], b[1], 2, "leg"});
    }
    for (const auto& n : web.internal_nodes) {
        const auto c = px(n.position);
        scene.points.push_back({c[0], c[1], 4, "node"});
    }
    return scene;
}

SvgScene render_density(int p, const std::vector<Density>& densities) {
    constexpr double xs = 120, ys = 60, amp = 80;
    SvgScene scene;
    double max_a = 1.0;
    for (const auto& d : densities) max_a = std::max({max_a, std::abs(d.lo), std::abs(d.hi)});
    const double top = -ys * 2 * std::numbers::pi * (p - 1) / p;
    scene.segments.push_back({0, 40, 0, top - amp - 20, 1, "axis"});
    for (int I = 0; I < p; ++I) {
        const double base = -ys * 2 * std::numbers::pi * I / p;
        const bool have = I < static_cast<int>(densities.size()) && densities[I].grid.size() >= 2;
        const double a = have ? std::max(std::abs(densities[I].lo), std::abs(densities[I].hi)) : max_a;
        scene.segments.push_back({-xs * a, base, xs * a, base, 3, I == 0 ? "cut-trivial" : "cut-nontrivial"});
        scene.labels.push_back({-xs * max_a - 40, base + 4, "I=" + std::to_string(I), ""});
        if (!have) continue;
        SvgScene::Polyline curve;
        curve.klass = "density";
        for (size_t k = 0; k < densities[I].grid.size(); ++k)
            curve.pts.push_back({xs * densities[I].grid[k], base - amp * densities[I].values[k]});
        scene.polylines.push_back(curve);
    }
    return scene;
}

}  // namespace lenscs
