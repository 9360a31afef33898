#include "lenscs/toric_fan.hpp"

#include <stdexcept>

namespace lenscs {

LatticeFan build_fan(const LensSpace& ls) {
    const std::int64_t p = ls.p;
    const std::int64_t q = ls.q;

    LatticeFan fan{ls, {}, {}};
    fan.points.reserve(static_cast<std::size_t>(p) + 3);
    fan.points.push_back({q + 1, 0});
    fan.points.push_back({q, 0});
    for (std::int64_t j = 1; j <= p; ++j) {
        fan.points.push_back({q - (j * q) / p, j});
    }
    fan.points.push_back({1, p});

    fan.hull_vertices = convex_hull(fan.points);
    if (fan.points.size() != static_cast<std::size_t>(p + 3) || fan.hull_vertices.size() != 4)
        throw std::logic_error("fan construction violated its invariants");
    if (interior_points(fan).size() != static_cast<std::size_t>(p - 1))
        throw std::logic_error("fan interior count mismatch");
    return fan;
}

std::vector<LatticePoint2> interior_points(const LatticeFan& fan) {
    std::vector<LatticePoint2> out;
    for (const auto& v : fan.points)
        if (classify_against_hull(fan.hull_vertices, v) == HullSide::interior) out.push_back(v);
    return out;
}

std::optional<AffineUnimodularMap> fan_automorphism(const LatticeFan& a, const LatticeFan& b) {
    return find_lattice_isomorphism(a.points, b.points);
}

}
