#pragma once

#include "json.hpp"
#include "lenscs/analysis_reports.hpp"
#include "lenscs/equilibrium.hpp"
#include "lenscs/newton_polynomial.hpp"
#include "lenscs/spectral_curve.hpp"
#include "lenscs/triangulation.hpp"

namespace lenscs {

// Insertion-ordered documents so envelopes read tool_version, command,
// inputs, outputs top to bottom and reruns are byte-identical.
using ojson = nlohmann::ordered_json;

// Complex values are always {re, im} objects.
ojson json_of(cplx z);
ojson json_of(const LatticePoint2& v);
ojson json_of(const AffineUnimodularMap& map);
ojson json_of(const LatticeFan& fan);
ojson json_of(const Triangulation& tri);
ojson json_of(const ToricTopology& topo);
ojson json_of(const PQWeb& web);
ojson json_of(const CoeffExpr& coeff);
ojson json_of(const NewtonPolynomial& np);
ojson json_of(const CurveInvariants& inv);
ojson json_of(const EquilibriumConfig& cfg);
ojson json_of(const Density& den);
ojson json_of(const SpectralCurveQ1& curve);
ojson json_of(const Claim1Report& rep);
ojson json_of(const QIndependenceReport& rep);

}  // namespace lenscs
