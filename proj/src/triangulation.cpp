#include "lenscs/triangulation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace lenscs {

namespace {

std::int64_t tri_orient2(const std::vector<LatticePoint2>& pts, const std::array<int, 3>& t) {
    return orient(pts[static_cast<std::size_t>(t[0])], pts[static_cast<std::size_t>(t[1])],
                  pts[static_cast<std::size_t>(t[2])]);
}

}  // namespace

Triangulation triangulate_points(const std::vector<LatticePoint2>& pts) {
    const int n = static_cast<int>(pts.size());
    if (n < 3) throw std::invalid_argument("triangulation needs at least 3 points");

    std::vector<int> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        const auto& a = pts[static_cast<std::size_t>(i)];
        const auto& b = pts[static_cast<std::size_t>(j)];
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });

    Triangulation tri;
    tri.points = pts;

    auto at = [&](int i) -> const LatticePoint2& { return pts[static_cast<std::size_t>(i)]; };

    // Startup: extend a collinear chain until a point leaves the line, then fan
    // triangles to every chain edge. Insertion order is lexicographic, so each
    // later point is outside the hull of its predecessors.
    std::vector<int> hull;  // CCW, collinear boundary vertices retained
    std::size_t k = 0;
    std::vector<int> chain;
    for (; k < order.size(); ++k) {
        int idx = order[k];
        if (chain.size() < 2) {
            chain.push_back(idx);
            continue;
        }
        if (orient(at(chain[0]), at(chain[1]), at(idx)) == 0) {
            chain.push_back(idx);
            continue;
        }
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
            tri.simplices.push_back({chain[i], chain[i + 1], idx});
        if (orient(at(chain[0]), at(chain[1]), at(idx)) > 0) {
            hull = chain;
        } else {
            hull.assign(chain.rbegin(), chain.rend());
        }
        hull.push_back(idx);
        ++k;
        break;
    }
    if (hull.empty()) throw std::invalid_argument("all points are collinear");

    for (; k < order.size(); ++k) {
        int idx = order[k];
        const int m = static_cast<int>(hull.size());
        std::vector<char> vis(static_cast<std::size_t>(m), 0);
        int nvis = 0;
        for (int i = 0; i < m; ++i) {
            if (orient(at(hull[static_cast<std::size_t>(i)]),
                       at(hull[static_cast<std::size_t>((i + 1) % m)]), at(idx)) < 0) {
                vis[static_cast<std::size_t>(i)] = 1;
                ++nvis;
            }
        }
        if (nvis == 0 || nvis == m) throw std::logic_error("point not strictly outside hull");
        int s = -1;
        for (int i = 0; i < m; ++i) {
            if (vis[static_cast<std::size_t>(i)] && !vis[static_cast<std::size_t>((i + m - 1) % m)]) {
                if (s >= 0) throw std::logic_error("visible edges not contiguous");
                s = i;
            }
        }
        int e = s;
        while (vis[static_cast<std::size_t>((e + 1) % m)]) e = (e + 1) % m;

        for (int i = s;; i = (i + 1) % m) {
            tri.simplices.push_back(
                {hull[static_cast<std::size_t>(i)], hull[static_cast<std::size_t>((i + 1) % m)], idx});
            if (i == e) break;
        }
        std::vector<int> next;
        next.reserve(hull.size() + 1);
        for (int i = (e + 1) % m;; i = (i + 1) % m) {
            next.push_back(hull[static_cast<std::size_t>(i)]);
            if (i == s) break;
        }
        next.push_back(idx);
        hull = std::move(next);
    }

    for (auto& t : tri.simplices) std::sort(t.begin(), t.end());
    std::sort(tri.simplices.begin(), tri.simplices.end());

    std::map<std::pair<int, int>, std::pair<int, int>> seen;  // edge -> (t0, t1)
    for (int ti = 0; ti < static_cast<int>(tri.simplices.size()); ++ti) {
        const auto& t = tri.simplices[static_cast<std::size_t>(ti)];
        const std::pair<int, int> es[3] = {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}};
        for (const auto& e : es) {
            auto it = seen.find(e);
            if (it == seen.end())
                seen.emplace(e, std::make_pair(ti, -1));
            else if (it->second.second < 0)
                it->second.second = ti;
            else
                throw std::logic_error("edge shared by more than two simplices");
        }
    }
    tri.edges.reserve(seen.size());
    for (const auto& [e, ts] : seen) tri.edges.push_back({e.first, e.second, ts.first, ts.second});
    return tri;
}

Triangulation triangulate(const LatticeFan& fan) {
    Triangulation tri = triangulate_points(fan.points);
    const std::int64_t p = fan.label.p;
    if (static_cast<std::int64_t>(tri.simplices.size()) != 2 * p)
        throw std::logic_error("triangulation simplex count mismatch");
    for (const auto& t : tri.simplices)
        if (std::abs(tri_orient2(tri.points, t)) != 1)
            throw std::logic_error("triangulation contains a non-unimodular simplex");
    std::vector<char> used(tri.points.size(), 0);
    for (const auto& t : tri.simplices)
        for (int v : t) used[static_cast<std::size_t>(v)] = 1;
    if (std::count(used.begin(), used.end(), char(1)) != static_cast<std::ptrdiff_t>(tri.points.size()))
        throw std::logic_error("triangulation does not use every point");
    return tri;
}

ToricTopology topology(const LatticeFan& fan, const Triangulation& tri) {
    ToricTopology out{};
    out.euler = static_cast<std::int64_t>(tri.simplices.size());
    out.b0 = 1;
    out.b4 = static_cast<std::int64_t>(interior_points(fan).size());
    out.b2 = out.euler - out.b0 - out.b4;
    return out;
}

PQWeb pq_web(const Triangulation& tri) {
    PQWeb web;
    web.internal_nodes.reserve(tri.simplices.size());
    for (const auto& t : tri.simplices) {
        double bx = 0, by = 0;
        for (int v : t) {
            bx += static_cast<double>(tri.points[static_cast<std::size_t>(v)].x);
            by += static_cast<double>(tri.points[static_cast<std::size_t>(v)].y);
        }
        web.internal_nodes.push_back({{bx / 3.0, by / 3.0}});
    }
    for (const auto& e : tri.edges) {
        if (e.t1 >= 0) {
            web.internal_edges.emplace_back(e.t0, e.t1);
            continue;
        }
        const auto& a = tri.points[static_cast<std::size_t>(e.a)];
        const auto& b = tri.points[static_cast<std::size_t>(e.b)];
        const double mx = 0.5 * static_cast<double>(a.x + b.x);
        const double my = 0.5 * static_cast<double>(a.y + b.y);
        double nx = static_cast<double>(b.y - a.y);
        double ny = static_cast<double>(a.x - b.x);
        const double len = std::hypot(nx, ny);
        nx /= len;
        ny /= len;
        const auto& node = web.internal_nodes[static_cast<std::size_t>(e.t0)].position;
        if (nx * (node[0] - mx) + ny * (node[1] - my) > 0) {
            nx = -nx;
            ny = -ny;
        }
        web.external_legs.push_back({e.t0, {mx + 0.7 * nx, my + 0.7 * ny}});
    }
    return web;
}

}
