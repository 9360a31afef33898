#include "lenscs/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "lenscs/exact_partition.hpp"

namespace lenscs {

namespace {

// QUADPACK dqk15 abscissae/weights (positive half; node 7 is the midpoint).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Gk15Out {
    cplx integral;
    double error;
};

Gk15Out gk15(const std::function<cplx(double)>& f, double a, double b, long& evals) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    cplx fv[15];
    for (int j = 0; j < 7; ++j) {
        fv[j] = f(c - h * kXgk[j]);
        fv[14 - j] = f(c + h * kXgk[j]);
    }
    fv[7] = f(c);
    evals += 15;

    cplx resk = kWgk[7] * fv[7];
    cplx resg = kWg[3] * fv[7];
    for (int j = 0; j < 7; ++j) resk += kWgk[j] * (fv[j] + fv[14 - j]);
    for (int j = 0; j < 4; ++j) {
        const int i = 2 * j + 1;  // Gauss nodes sit at odd Kronrod indices
        if (i < 7) resg += kWg[j] * (fv[i] + fv[14 - i]);
    }
    return {resk * h, std::abs(resk - resg) * h};
}

void adapt(const std::function<cplx(double)>& f, double a, double b, double abs_tol,
           double rel_tol, int depth, int max_depth, cplx& total, double& err, long& evals) {
    const auto r = gk15(f, a, b, evals);
    if (depth >= max_depth ||
        r.error <= abs_tol + rel_tol * std::abs(r.integral)) {
        total += r.integral;
        err += r.error;
        return;
    }
    const double mid = 0.5 * (a + b);
    adapt(f, a, mid, abs_tol / 2, rel_tol, depth + 1, max_depth, total, err, evals);
    adapt(f, mid, b, abs_tol / 2, rel_tol, depth + 1, max_depth, total, err, evals);
}

}  // namespace

QuadratureResult adaptive_gk15(const std::function<cplx(double)>& f, double a, double b,
                               double abs_tol, double rel_tol, int max_depth) {
    QuadratureResult out;
    cplx total = 0.0;
    double err = 0.0;
    adapt(f, a, b, abs_tol, rel_tol, 0, max_depth, total, err, out.evaluations);
    out.value = total;
    out.abs_error_estimate = err;
    return out;
}

QuadratureResult tensor_quadrature(const std::function<cplx(const std::vector<double>&)>& f,
                                   int dim, double L, double abs_tol, double rel_tol,
                                   long eval_budget) {
    if (dim < 1) throw std::invalid_argument("tensor_quadrature: dim must be >= 1");
    long evals = 0;
    double err_accum = 0.0;
    std::vector<double> x(static_cast<std::size_t>(dim), 0.0);

    // Iterated adaptive passes; each level integrates the level below as a
    // black box. A level d error is multiplied by the (2L)^d outer measure,
    // so inner levels run at proportionally tighter absolute tolerance.
    std::function<cplx(int)> level = [&](int d) -> cplx {
        if (d == dim) {
            if (++evals > eval_budget) throw BudgetError("quadrature evaluation budget exceeded");
            return f(x);
        }
        const double scale = std::pow(2.0 * L, d);
        cplx total = 0.0;
        double err = 0.0;
        long dummy = 0;
        adapt([&](double xi) { x[static_cast<std::size_t>(d)] = xi; return level(d + 1); },
              -L, L, abs_tol / (scale * 4.0), rel_tol, 0, 13, total, err, dummy);
        if (d == 0) err_accum = err;
        return total;
    };

    QuadratureResult out;
    out.value = level(0);
    out.abs_error_estimate = err_accum;
    out.evaluations = evals;
    return out;
}

}  // namespace lenscs
