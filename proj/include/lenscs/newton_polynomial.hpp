#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lenscs/lattice_geometry.hpp"
#include "lenscs/lens_space.hpp"
#include "lenscs/toric_fan.hpp"

namespace lenscs {

// Coefficient of one monomial: a complex constant plus named symbols with
// numeric multipliers, enough to carry merges like 1 + d_p.
struct CoeffExpr {
    std::complex<double> constant{0.0, 0.0};
    std::vector<std::pair<std::string, std::complex<double>>> symbols;

    bool is_numeric() const { return symbols.empty(); }
    bool is_zero() const { return symbols.empty() && constant == std::complex<double>{0.0, 0.0}; }
    std::string str() const;
};

// Laurent polynomial in e^u, e^v given by its monomials.
struct NewtonPolynomial {
    std::vector<std::pair<LatticePoint2, CoeffExpr>> terms;  // sorted by exponent, no zeros

    std::vector<LatticePoint2> support() const;
    std::string str() const;
};

struct CurveInvariants {
    std::int64_t genus;      // lattice points strictly inside the support hull
    std::int64_t punctures;  // lattice points on the support hull boundary
    bool hyperelliptic_family;
};

// Coefficient slot: a numeric value, or monostate meaning "keep symbolic d_j".
using MirrorCoeff = std::optional<std::complex<double>>;

// (e^{pu+qv} - 1)(e^v - 1) + d_p + sum_{j=1}^{p-1} d_j e^{ju + (q - floor((p-j)q/p)) v}.
// coeffs[j-1] feeds d_j, j = 1..p.
NewtonPolynomial newton_polynomial(const LensSpace& ls, const std::vector<MirrorCoeff>& coeffs);

// (e^v - 1)(e^{pu+v} - 1) + e^t - 1 + e^v sum_{n=1}^{p-1} d_n e^{nu}; d has p-1 entries.
NewtonPolynomial q1_specialization(int p, double t, const std::vector<MirrorCoeff>& d);

CurveInvariants curve_invariants(const NewtonPolynomial& np);

// Affine-unimodular identification of the support with a fan's point set.
std::optional<AffineUnimodularMap> support_map(const NewtonPolynomial& np, const LatticeFan& fan);

}
