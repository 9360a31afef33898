#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "lenscs/lattice_geometry.hpp"
#include "lenscs/toric_fan.hpp"

namespace lenscs {

// Full triangulation on a point set: every input point is a vertex.
struct Triangulation {
    std::vector<LatticePoint2> points;
    std::vector<std::array<int, 3>> simplices;  // index triples, each sorted, list sorted

    // Undirected edge with its incident simplices; t1 = -1 on the hull boundary.
    struct Edge {
        int a, b;    // point indices, a < b
        int t0, t1;  // simplex indices
    };
    std::vector<Edge> edges;

    std::vector<std::pair<int, int>> adjacency() const {
        std::vector<std::pair<int, int>> adj;
        for (const auto& e : edges)
            if (e.t1 >= 0) adj.emplace_back(e.t0, e.t1);
        return adj;
    }
};

struct ToricTopology {
    std::int64_t euler;
    std::int64_t b0, b2, b4;
};

struct PQWeb {
    struct Node {
        std::array<double, 2> position;  // simplex barycenter
    };
    struct Leg {
        int node;
        std::array<double, 2> tip;  // outward, perpendicular to the hull edge
    };
    std::vector<Node> internal_nodes;                  // one per simplex
    std::vector<std::pair<int, int>> internal_edges;   // dual edge per shared simplex edge
    std::vector<Leg> external_legs;                    // one per hull edge
};

// Incremental insertion in lexicographic (x, y) point order; each point lands
// outside the running hull, and collinear boundary vertices are kept so the
// result is a full triangulation using every point. This is the pushing
// (regular) triangulation for the lexicographic lifting.
Triangulation triangulate_points(const std::vector<LatticePoint2>& pts);

// As above, plus the fan's invariants: 2p unit-area simplices covering the hull.
Triangulation triangulate(const LatticeFan& fan);

ToricTopology topology(const LatticeFan& fan, const Triangulation& tri);

PQWeb pq_web(const Triangulation& tri);

}
