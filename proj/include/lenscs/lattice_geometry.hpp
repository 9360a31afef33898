#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace lenscs {

struct LatticePoint2 {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const LatticePoint2& a, const LatticePoint2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const LatticePoint2& a, const LatticePoint2& b) { return !(a == b); }
    friend bool operator<(const LatticePoint2& a, const LatticePoint2& b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    }
    friend LatticePoint2 operator-(const LatticePoint2& a, const LatticePoint2& b) { return {a.x - b.x, a.y - b.y}; }
    friend LatticePoint2 operator+(const LatticePoint2& a, const LatticePoint2& b) { return {a.x + b.x, a.y + b.y}; }
};

// 2D cross product of (b - a) and (c - a); sign gives orientation.
inline std::int64_t orient(const LatticePoint2& a, const LatticePoint2& b, const LatticePoint2& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Counterclockwise convex hull, collinear points dropped. Returns the input
// point for degenerate single-point sets.
std::vector<LatticePoint2> convex_hull(std::vector<LatticePoint2> pts);

enum class HullSide { interior, boundary, outside };

// Position of a point relative to a CCW convex polygon.
HullSide classify_against_hull(const std::vector<LatticePoint2>& hull, const LatticePoint2& pt);

// min over primitive directions d of (max <d,v> - min <d,v>). The search runs
// over |d|_inf bounded by the bounding-box diameter, which is where the width
// of a convex lattice polygon is attained.
std::int64_t lattice_width(const std::vector<LatticePoint2>& pts);

// z -> M z + t with M integral and |det M| = 1.
struct AffineUnimodularMap {
    std::array<std::int64_t, 4> m{1, 0, 0, 1};  // row-major [a b; c d]
    LatticePoint2 t{0, 0};

    LatticePoint2 apply(const LatticePoint2& v) const {
        return {m[0] * v.x + m[1] * v.y + t.x, m[2] * v.x + m[3] * v.y + t.y};
    }
    std::int64_t det() const { return m[0] * m[3] - m[1] * m[2]; }
};

// Searches for an affine unimodular map sending point set A onto point set B.
// Candidates are generated from hull-vertex frames (vertex plus its two edge
// vectors), at most 8 per target vertex; every candidate is verified against
// the full point sets. Returns nullopt when no map exists.
std::optional<AffineUnimodularMap> find_lattice_isomorphism(const std::vector<LatticePoint2>& a,
                                                            const std::vector<LatticePoint2>& b);

}
