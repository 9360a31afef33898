#pragma once

#include <vector>

#include "lenscs/exact_partition.hpp"
#include "lenscs/lens_space.hpp"
#include "lenscs/numerics.hpp"
#include "lenscs/quadrature.hpp"

namespace lenscs {

enum class MatrixRep {
    MMCS,    // single group, m-dependent phases in the sinh pair
    MMCS2,   // p eigenvalue groups, fixed phase offsets pi*i*(I-J)/p and q*pi*i*(I-J)/p
    MMCS1a,  // m = 0 form with sinh(dx/2q) sinh(dx/2)
};

// Eigenvalue-integral model at real coupling g_s > 0. The label vector m is
// reduced mod p and stored ascending; for MMCS2 slot i belongs to the group
// of value m_i, so equal labels form contiguous blocks and N_I is the
// multiplicity of value I among the labels.
struct MatrixModelSpec {
    LensSpace ls;
    int N;
    double g_s;
    std::vector<int> m;
    MatrixRep rep;

    MatrixModelSpec(LensSpace l, int n, double gs, std::vector<int> mm, MatrixRep r);

    // group sizes N_I indexed by label value 0..p-1
    std::vector<int> group_sizes() const;
};

// Pointwise integrand of the selected representation, exactly as printed:
//   MMCS   e^{-g_s p x.x + 4 pi i m.x} prod sinh(D + i pi (q-1) dm / p) sinh(D),
//          D = (g_s/2)(x_i - x_j)
//   MMCS2  e^{-sum u^2 p / (2 g2)} prod sinh pairs with offsets i pi dm / p and
//          i pi q dm / p, arguments (u_i - u_j)/2, where g2 = g_s / 2 (this
//          representation's coupling is half the MMCS one)
//   MMCS1a e^{-p x.x/(g_s q)} prod sinh(dx/(2q)) sinh(dx/2)
cplx integrand(const MatrixModelSpec& spec, const std::vector<double>& x);
// Analytic continuation to complex arguments (used for matched-argument
// comparisons between representations).
cplx integrand(const MatrixModelSpec& spec, const std::vector<cplx>& x);

// Normalized integral of the representation:
//   MMCS   e^{-4 pi^2 (q-1) m^2/(g_s p)} * integral(printed integrand)
//   MMCS2  g_s^{-N} e^{-4 pi^2 q m^2/(g_s p)} * integral(printed integrand)
//   MMCS1a integral(printed integrand)
// The MMCS/MMCS2 prefactors restore the quadratic label dependence of the
// permutation-sum normalization, so ratios across labels match z_exact and
// the two representations agree with each other identically.
//
// MMCS is evaluated on the shifted contour x = y + 2 pi i m/(g_s p) where the
// Gaussian is centered and the label phases move into the sinh offsets; the
// integrand there is the printed one continued to complex arguments. Without
// the shift the integral is an e^{-4 pi^2 q m^2/(g_s p)}-sized residue of an
// O(1) oscillatory cancellation and unreachable in double precision.
QuadratureResult z_quadrature(const MatrixModelSpec& spec, double rel_tol = 1e-9);

// Importance sampling with the representation's Gaussian factor as proposal
// (same shifted contour as z_quadrature for MMCS). Deterministic per seed;
// abs_error_estimate is the standard error of the mean.
QuadratureResult z_monte_carlo(const MatrixModelSpec& spec, long samples, unsigned seed);

}  // namespace lenscs
