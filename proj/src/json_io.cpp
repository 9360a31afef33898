#include "lenscs/json_io.hpp"

namespace lenscs {

namespace {

ojson point_array(const std::vector<LatticePoint2>& pts) {
    ojson arr = ojson::array();
    for (const auto& v : pts) arr.push_back(json_of(v));
    return arr;
}

}  // namespace

ojson json_of(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

ojson json_of(const LatticePoint2& v) { return ojson::array({v.x, v.y}); }

ojson json_of(const AffineUnimodularMap& map) {
    return {{"matrix", {{map.m[0], map.m[1]}, {map.m[2], map.m[3]}}},
            {"translation", json_of(map.t)}};
}

ojson json_of(const LatticeFan& fan) {
    ojson rays = ojson::array();
    for (const auto& r : fan.rays()) rays.push_back({r[0], r[1], r[2]});
    return {{"p", fan.label.p},
            {"q", fan.label.q},
            {"points", point_array(fan.points)},
            {"rays", std::move(rays)},
            {"hull_vertices", point_array(fan.hull_vertices)}};
}

ojson json_of(const Triangulation& tri) {
    ojson simplices = ojson::array();
    for (const auto& s : tri.simplices) simplices.push_back({s[0], s[1], s[2]});
    ojson adjacency = ojson::array();
    for (const auto& [a, b] : tri.adjacency()) adjacency.push_back({a, b});
    return {{"points", point_array(tri.points)},
            {"simplices", std::move(simplices)},
            {"adjacency", std::move(adjacency)}};
}

ojson json_of(const ToricTopology& topo) {
    return {{"euler", topo.euler}, {"b0", topo.b0}, {"b2", topo.b2}, {"b4", topo.b4}};
}

ojson json_of(const PQWeb& web) {
    ojson nodes = ojson::array();
    for (const auto& n : web.internal_nodes) nodes.push_back({n.position[0], n.position[1]});
    ojson edges = ojson::array();
    for (const auto& [a, b] : web.internal_edges) edges.push_back({a, b});
    ojson legs = ojson::array();
    for (const auto& l : web.external_legs)
        legs.push_back({{"node", l.node}, {"tip", {l.tip[0], l.tip[1]}}});
    return {{"internal_nodes", std::move(nodes)},
            {"internal_edges", std::move(edges)},
            {"external_legs", std::move(legs)}};
}

ojson json_of(const CoeffExpr& coeff) {
    ojson symbols = ojson::array();
    for (const auto& [name, factor] : coeff.symbols)
        symbols.push_back({{"symbol", name}, {"factor", json_of(factor)}});
    return {{"constant", json_of(coeff.constant)}, {"symbols", std::move(symbols)}};
}

ojson json_of(const NewtonPolynomial& np) {
    ojson terms = ojson::array();
    for (const auto& [expo, coeff] : np.terms)
        terms.push_back({{"exponent", json_of(expo)}, {"coefficient", json_of(coeff)}});
    return {{"terms", std::move(terms)}, {"pretty", np.str()}};
}

ojson json_of(const CurveInvariants& inv) {
    return {{"genus", inv.genus},
            {"punctures", inv.punctures},
            {"hyperelliptic_family", inv.hyperelliptic_family}};
}

ojson json_of(const EquilibriumConfig& cfg) {
    return {{"groups", cfg.groups},
            {"residual", cfg.residual},
            {"im_residual", cfg.im_residual},
            {"iterations", cfg.iterations}};
}

ojson json_of(const Density& den) {
    return {{"lo", den.lo},
            {"hi", den.hi},
            {"grid", den.grid},
            {"values", den.values},
            {"filling", den.filling}};
}

ojson json_of(const SpectralCurveQ1& curve) {
    return {{"p", curve.p}, {"t", curve.t}, {"d", curve.d}};
}

ojson json_of(const Claim1Report& rep) {
    return {{"p", rep.ls.p},
            {"q", rep.ls.q},
            {"width", rep.width},
            {"genus", rep.genus},
            {"punctures", rep.punctures},
            {"hyperelliptic_family", rep.hyperelliptic_family},
            {"verdict", rep.verdict}};
}

ojson json_of(const QIndependenceReport& rep) {
    return {{"p", rep.p},
            {"N", rep.N},
            {"t", rep.t},
            {"q_list", rep.q_list},
            {"endpoints", rep.endpoints},
            {"max_endpoint_discrepancy", rep.max_endpoint_discrepancy},
            {"max_density_distance", rep.max_density_distance},
            {"constrained_slice", rep.constrained_slice},
            {"pass", rep.pass}};
}

}  // namespace lenscs
