#include "lenscs/lattice_geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lenscs {

std::vector<LatticePoint2> convex_hull(std::vector<LatticePoint2> pts) {
    std::sort(pts.begin(), pts.end(), [](const LatticePoint2& a, const LatticePoint2& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;

    std::vector<LatticePoint2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
        while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

HullSide classify_against_hull(const std::vector<LatticePoint2>& hull, const LatticePoint2& pt) {
    const std::size_t m = hull.size();
    if (m == 0) return HullSide::outside;
    if (m == 1) return pt == hull[0] ? HullSide::boundary : HullSide::outside;
    if (m == 2) {
        // Degenerate segment hull.
        const auto d = hull[1] - hull[0];
        const auto r = pt - hull[0];
        if (d.x * r.y - d.y * r.x != 0) return HullSide::outside;
        const std::int64_t s = d.x * r.x + d.y * r.y;
        const std::int64_t len2 = d.x * d.x + d.y * d.y;
        return (s >= 0 && s <= len2) ? HullSide::boundary : HullSide::outside;
    }
    bool on_edge = false;
    for (std::size_t i = 0; i < m; ++i) {
        const std::int64_t o = orient(hull[i], hull[(i + 1) % m], pt);
        if (o < 0) return HullSide::outside;
        if (o == 0) on_edge = true;
    }
    return on_edge ? HullSide::boundary : HullSide::interior;
}

std::int64_t lattice_width(const std::vector<LatticePoint2>& pts) {
    if (pts.empty()) throw std::invalid_argument("lattice_width: empty point set");
    if (pts.size() == 1) return 0;
    std::int64_t xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
    for (const auto& p : pts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const std::int64_t diam = std::max<std::int64_t>(1, std::max(xmax - xmin, ymax - ymin));

    std::int64_t best = -1;
    auto consider = [&](std::int64_t dx, std::int64_t dy) {
        std::int64_t lo = dx * pts[0].x + dy * pts[0].y, hi = lo;
        for (const auto& p : pts) {
            const std::int64_t v = dx * p.x + dy * p.y;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (best < 0 || hi - lo < best) best = hi - lo;
    };
    // One direction per antipodal pair: dy > 0, or dy = 0 with dx > 0.
    consider(1, 0);
    for (std::int64_t dy = 1; dy <= diam; ++dy)
        for (std::int64_t dx = -diam; dx <= diam; ++dx)
            if (std::gcd(std::llabs(dx), dy) == 1) consider(dx, dy);
    return best;
}

namespace {

bool multiset_equal(std::vector<LatticePoint2> a, std::vector<LatticePoint2> b) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

}  // namespace

std::optional<AffineUnimodularMap> find_lattice_isomorphism(const std::vector<LatticePoint2>& a,
                                                            const std::vector<LatticePoint2>& b) {
    if (a.size() != b.size() || a.empty()) return std::nullopt;
    const auto ha = convex_hull(a);
    const auto hb = convex_hull(b);
    if (ha.size() != hb.size()) return std::nullopt;
    const std::size_t m = ha.size();
    if (m < 3) return std::nullopt;  // degenerate sets are out of scope here

    const LatticePoint2 a0 = ha[0];
    const LatticePoint2 e1 = ha[1] - a0;
    const LatticePoint2 e2 = ha[m - 1] - a0;
    const std::int64_t dA = e1.x * e2.y - e1.y * e2.x;
    if (dA == 0) return std::nullopt;

    for (std::size_t j = 0; j < m; ++j) {
        const LatticePoint2 b0 = hb[j];
        const LatticePoint2 fn = hb[(j + 1) % m] - b0;
        const LatticePoint2 fp = hb[(j + m - 1) % m] - b0;
        // Orientation preserving maps (e1,e2) -> (fn,fp); reversing -> (fp,fn).
        for (int rev = 0; rev < 2; ++rev) {
            const LatticePoint2 f1 = rev ? fp : fn;
            const LatticePoint2 f2 = rev ? fn : fp;
            // Solve M [e1 e2] = [f1 f2] over the rationals, require integrality.
            const std::int64_t n00 = f1.x * e2.y - f2.x * e1.y;
            const std::int64_t n01 = f2.x * e1.x - f1.x * e2.x;
            const std::int64_t n10 = f1.y * e2.y - f2.y * e1.y;
            const std::int64_t n11 = f2.y * e1.x - f1.y * e2.x;
            if (n00 % dA || n01 % dA || n10 % dA || n11 % dA) continue;
            AffineUnimodularMap map;
            map.m = {n00 / dA, n01 / dA, n10 / dA, n11 / dA};
            const std::int64_t det = map.det();
            if (det != 1 && det != -1) continue;
            map.t = {b0.x - map.m[0] * a0.x - map.m[1] * a0.y, b0.y - map.m[2] * a0.x - map.m[3] * a0.y};
            std::vector<LatticePoint2> image;
            image.reserve(a.size());
            for (const auto& p : a) image.push_back(map.apply(p));
            if (multiset_equal(std::move(image), b)) return map;
        }
    }
    return std::nullopt;
}

}
