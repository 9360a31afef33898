#pragma once

#include <vector>

#include "lenscs/lens_space.hpp"

namespace lenscs {

// 't Hooft coupling t = g_s N and its split S_I across the p eigenvalue
// groups; fillings must be nonnegative and sum to t.
struct TooftData {
    double t;
    std::vector<double> fillings;

    TooftData(double t_, std::vector<double> fillings_);

    // S_1 = ... = S_{p-1}: the slice on which the large-N curve is known
    bool symmetric() const;
};

// convenience: fillings (S0, (t-S0)/(p-1), ...)
TooftData symmetric_fillings(int p, double t, double S0);

// Solved finite-N configuration: group I holds its eigenvalues sorted
// ascending. residual is the max saddle-equation violation; im_residual is
// the max imaginary part of the force (must cancel at a genuine saddle of a
// symmetric pattern, reported as a diagnostic otherwise).
struct EquilibriumConfig {
    std::vector<std::vector<double>> groups;
    double residual;
    double im_residual;
    int iterations;
};

// Sampled one-cut eigenvalue density, normalized so that the trapezoid
// integral over grid equals filling (= S_I).
struct Density {
    double lo, hi;
    std::vector<double> grid;
    std::vector<double> values;
    double filling;
};

// Damped Newton solve of the finite-N saddle equations
//   p x_i = (t/N) [ sum_{j != i, same group} coth(Dx/2)
//                 + 1/2 sum_{J != I} sum_j (coth(Dx/2 + d_IJ) + coth(Dx/2 + q d_IJ)) ],
// d_IJ = i pi (I-J)/p, using the real part of the force (the kernel pair
// coth(x+it)+coth(x-it) = 2 sinh 2x/(cosh 2x - cos 2t) for symmetric
// patterns). Eigenvalues start on scaled semicircle quantiles; the step is
// halved on residual increase or group-mate collision. p = 1 is accepted as
// the degenerate single-group gas used for validation.
EquilibriumConfig saddle_solve(int p, int q, int N, const TooftData& data, double tol = 1e-9,
                               int max_iter = 200);
EquilibriumConfig saddle_solve(const LensSpace& ls, int N, const TooftData& data,
                               double tol = 1e-9, int max_iter = 200);

// Interaction energy whose gradient is the saddle force; the solver's output
// is checked against direct minimization of this in tests.
double equilibrium_energy(int p, int q, double t, const std::vector<std::vector<double>>& groups);

// Nearest-neighbor spacing estimate at gap midpoints, rescaled so the
// trapezoid integral equals S_I exactly.
Density empirical_density(const EquilibriumConfig& cfg, const TooftData& data, int group);

// Cut endpoint from the outermost three eigenvalues on each side: a
// square-root edge gives lambda_k = a - b (k+3/4)^{2/3} - c (k+3/4)^{4/3}
// counting inward (equilibrium points are orthogonal-polynomial-type zeros,
// so the edge quantile offset is the Airy 3/4, not the midpoint 1/2), solved
// as a 3x3 linear system and averaged over the two sides. Falls back to
// max |lambda| for groups smaller than 6.
double estimate_cut_endpoint(const EquilibriumConfig& cfg, int group);

}  // namespace lenscs
