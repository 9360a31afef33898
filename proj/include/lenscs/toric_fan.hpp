#pragma once

#include <optional>
#include <vector>

#include "lenscs/lattice_geometry.hpp"
#include "lenscs/lens_space.hpp"

namespace lenscs {

// Planar point configuration of the resolved quotient geometry. The 3d fan
// rays are (x, y, 1) over the points, so the planar data determines
// everything.
struct LatticeFan {
    LensSpace label;
    std::vector<LatticePoint2> points;         // p+3 points, fixed construction order
    std::vector<LatticePoint2> hull_vertices;  // CCW, 4 vertices

    std::vector<std::array<std::int64_t, 3>> rays() const {
        std::vector<std::array<std::int64_t, 3>> r;
        r.reserve(points.size());
        for (const auto& v : points) r.push_back({v.x, v.y, 1});
        return r;
    }
};

// Point configuration for (p, q):
//   (q+1, 0), (q, 0), (q - floor(j q / p), j) for j = 1..p, (1, p).
// The hull is a parallelogram of area p whose interior holds exactly p-1
// lattice points, one per row j = 1..p-1.
LatticeFan build_fan(const LensSpace& ls);

// Points of the configuration strictly inside the hull.
std::vector<LatticePoint2> interior_points(const LatticeFan& fan);

// Affine unimodular identification of two fans, when one exists.
std::optional<AffineUnimodularMap> fan_automorphism(const LatticeFan& a, const LatticeFan& b);

}
