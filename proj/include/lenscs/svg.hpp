#pragma once

#include <array>
#include <string>
#include <vector>

#include "lenscs/equilibrium.hpp"
#include "lenscs/toric_fan.hpp"
#include "lenscs/triangulation.hpp"

namespace lenscs {

// Flat drawing model: primitives carry class names, styling lives in one
// embedded stylesheet, and the viewBox is computed from the content so every
// element is guaranteed to fall inside it. to_xml() is deterministic for a
// given scene (fixed float formatting, fixed element order).
struct SvgScene {
    struct Point {
        double x = 0, y = 0, r = 3;
        std::string klass;
    };
    struct Segment {
        double x1 = 0, y1 = 0, x2 = 0, y2 = 0;
        double width = 1;
        std::string klass;
    };
    struct Polyline {
        std::vector<std::array<double, 2>> pts;
        bool closed = false;
        std::string klass;
    };
    struct Label {
        double x = 0, y = 0;
        std::string text;
        std::string klass;
    };

    std::vector<Point> points;
    std::vector<Segment> segments;
    std::vector<Polyline> polylines;
    std::vector<Label> labels;

    // {min_x, min_y, width, height}; encloses every primitive plus a margin.
    // Throws when any stored coordinate is non-finite.
    std::array<double, 4> view_box() const;

    std::string to_xml() const;
};

SvgScene render_fan(const LatticeFan& fan, const Triangulation& tri);

SvgScene render_web(const PQWeb& web);

// One baseline per group at height 2*pi*I/p, density drawn above it. The
// I = 0 baseline is the cut around the trivial flat direction and keeps the
// default stroke; the others are classed cut-nontrivial and drawn in red.
// Groups with an empty grid get a baseline only.
SvgScene render_density(int p, const std::vector<Density>& densities);

}  // namespace lenscs
