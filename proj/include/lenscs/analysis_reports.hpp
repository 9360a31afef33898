#pragma once

#include <string>
#include <vector>

#include "lenscs/equilibrium.hpp"
#include "lenscs/lens_space.hpp"

namespace lenscs {

// Outcome of solving the same (p, N, t, fillings) at several q.
struct QIndependenceReport {
    int p;
    int N;
    double t;
    std::vector<int> q_list;
    std::vector<std::vector<double>> endpoints;  // [q index][group]
    double max_endpoint_discrepancy;             // relative, over groups and q pairs
    double max_density_distance;                 // sup norm / peak, cut interiors
    bool constrained_slice;                      // fillings symmetric
    bool pass;                                   // asserted only on the constrained slice
};

// Runs saddle_solve per q and compares empirical densities group by group on
// the middle 80% of each cut. On asymmetric fillings the numbers are reported
// but no PASS is claimed (the q-independence statement covers only the
// symmetric slice).
QIndependenceReport q_independence_test(int p, const std::vector<int>& q_list, int N,
                                        const TooftData& data, double tol_endpoint = 0.01,
                                        double tol_density = 0.02);

// Width/genus verdict for the duality obstruction: the constrained large-N
// family is hyperelliptic of genus p-1, which fits in the mirror support only
// when the support has lattice width <= 2, i.e. q = 1 or q = p-1.
struct Claim1Report {
    LensSpace ls;
    std::int64_t width;
    std::int64_t genus;
    std::int64_t punctures;
    bool hyperelliptic_family;
    std::string verdict;  // "DUALITY-CONSISTENT" or "OBSTRUCTED"
};

Claim1Report claim1_report(const LensSpace& ls);

// Checks the two boundary-value identities
//   coth_+ + coth_- -> 2 pv(coth),   coth_+ - coth_- -> -2 pi i delta
// convolved against a sampled test density, comparing eps-regularized
// convolutions (eps = 1e-2, 1e-3, 1e-4) with principal-value quadrature and
// pointwise evaluation. Returns the geometric extrapolation of the worst
// error over the evaluation points.
double sokhotski_check(const Density& test_density, const std::vector<double>& eval_points);

}  // namespace lenscs
