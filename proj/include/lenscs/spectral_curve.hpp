#pragma once

#include <vector>

#include "lenscs/equilibrium.hpp"
#include "lenscs/numerics.hpp"

namespace lenscs {

// Constrained large-N curve for q = 1: y^2 = g(Z)^2 - 4 e^t Z^p with
// g(Z) = sum_{n=0}^p d_n Z^n, in the gauge d_0 = d_p = 1 forced by the
// resolvent limits omega -> -t (Z -> 0) and omega -> t (Z -> infinity).
// Symmetric fillings make g palindromic: d_n = d_{p-n}.
struct SpectralCurveQ1 {
    int p;
    double t;
    std::vector<double> d;  // size p+1, d[0] = d[p] = 1

    cplx g(cplx Z) const;
};

// The 2p zeros of g^2 - 4 e^t Z^p. They sit in reciprocal-modulus pairs
// e^{+-a_I} near the p rays e^{2 pi i I/p}; exactly on the rays for equal
// fillings or p <= 2, tilted by O(asymmetry) otherwise (the straight-contour
// ansatz is only approximately self-consistent off the democratic slice).
std::vector<cplx> curve_branch_points(const SpectralCurveQ1& curve);

// Half-widths a_I of the p cuts, from the nearest-ray-grouped branch points.
// Throws when a root falls between rays (boundary of moduli space).
std::vector<double> cut_endpoints(const SpectralCurveQ1& curve);

// Resolvent omega(z) = 2 log X - t where X solves X^2 - g X + e^t Z^p = 0,
// continued from X = 1 at Re z -> -infinity by root tracking along a
// horizontal path (refined near cut endpoints). z must avoid the cuts.
cplx resolvent(const SpectralCurveQ1& curve, cplx z);

// Filling fraction recovered from the curve: (1/4 pi i) contour integral of
// omega dz around cut I, on an ellipse with periodic-trapezoid refinement.
cplx a_period(const SpectralCurveQ1& curve, int I, double rel_tol = 1e-11);

// Density on cut I from the on-cut quadratic roots: t rho_I(x) =
// |Arg X_+|/pi with X_+ the root continued from above. Sampled on an
// endpoint-clustered grid x = a_I sin(phi); filling holds the phi-trapezoid
// integral (equals S_I by the period construction).
Density density_from_curve(const SpectralCurveQ1& curve, int I, int npts = 401);

// Coefficients d_1..d_{p-1} (palindromic) determined so the A-periods hit the
// symmetric fillings (S0, (t-S0)/(p-1), ...): damped Newton on floor(p/2)
// unknowns with finite-difference Jacobian, starting from the democratic
// curve d = 0.
SpectralCurveQ1 build_curve_q1(int p, double t, double S0, double tol = 1e-9);

}  // namespace lenscs
