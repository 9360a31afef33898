#pragma once

#include <functional>

#include "lenscs/numerics.hpp"

namespace lenscs {

struct QuadratureResult {
    cplx value;
    double abs_error_estimate = 0.0;
    long evaluations = 0;
};

// Adaptive Gauss-Kronrod 7/15 on [a,b]. Bisects until the embedded error
// estimate of every panel clears abs_tol + rel_tol*|I| or max_depth is hit;
// leftover panel errors accumulate into the estimate rather than throwing.
QuadratureResult adaptive_gk15(const std::function<cplx(double)>& f, double a, double b,
                               double abs_tol, double rel_tol, int max_depth = 13);

// Tensor-product iterated quadrature over [-L,L]^dim, innermost axis last.
// eval_budget caps total integrand calls (BudgetError beyond it).
QuadratureResult tensor_quadrature(const std::function<cplx(const std::vector<double>&)>& f,
                                   int dim, double L, double abs_tol, double rel_tol,
                                   long eval_budget = 40000000);

}  // namespace lenscs
