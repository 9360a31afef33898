#include "lenscs/analysis_reports.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "lenscs/newton_polynomial.hpp"
#include "lenscs/quadrature.hpp"

namespace lenscs {

namespace {

constexpr double kPi = std::numbers::pi;

double interp(const Density& d, double x) {
    const auto& g = d.grid;
    if (g.empty() || x <= g.front() || x >= g.back()) return 0.0;
    const auto it = std::upper_bound(g.begin(), g.end(), x);
    const std::size_t k = static_cast<std::size_t>(it - g.begin());
    const double f = (x - g[k - 1]) / (g[k] - g[k - 1]);
    return (1.0 - f) * d.values[k - 1] + f * d.values[k];
}

}  // namespace

QIndependenceReport q_independence_test(int p, const std::vector<int>& q_list, int N,
                                        const TooftData& data, double tol_endpoint,
                                        double tol_density) {
    if (q_list.empty()) throw std::invalid_argument("q_list empty");
    QIndependenceReport rep;
    rep.p = p;
    rep.N = N;
    rep.t = data.t;
    rep.q_list = q_list;
    rep.constrained_slice = data.symmetric();

    std::vector<EquilibriumConfig> cfgs;
    for (int q : q_list) cfgs.push_back(saddle_solve(p, q, N, data));
    for (const auto& cfg : cfgs) {
        std::vector<double> ends;
        for (int g = 0; g < p; ++g) ends.push_back(estimate_cut_endpoint(cfg, g));
        rep.endpoints.push_back(std::move(ends));
    }

    double worst_end = 0.0, worst_den = 0.0;
    for (std::size_t qa = 0; qa < cfgs.size(); ++qa)
        for (std::size_t qb = qa + 1; qb < cfgs.size(); ++qb)
            for (int g = 0; g < p; ++g) {
                const double ea = rep.endpoints[qa][static_cast<std::size_t>(g)];
                const double eb = rep.endpoints[qb][static_cast<std::size_t>(g)];
                worst_end = std::max(worst_end, std::abs(ea - eb) / std::max(ea, eb));

                const Density da = empirical_density(cfgs[qa], data, g);
                const Density db = empirical_density(cfgs[qb], data, g);
                const double lim = 0.8 * std::min(ea, eb);
                double peak = 0.0, dist = 0.0;
                for (int k = 0; k <= 200; ++k) {
                    const double x = -lim + 2.0 * lim * k / 200.0;
                    const double va = interp(da, x), vb = interp(db, x);
                    peak = std::max(peak, std::max(va, vb));
                    dist = std::max(dist, std::abs(va - vb));
                }
                worst_den = std::max(worst_den, dist / peak);
            }
    rep.max_endpoint_discrepancy = worst_end;
    rep.max_density_distance = worst_den;
    rep.pass = rep.constrained_slice && worst_end < tol_endpoint && worst_den < tol_density;
    return rep;
}

Claim1Report claim1_report(const LensSpace& ls) {
    const auto np = newton_polynomial(ls, std::vector<MirrorCoeff>(ls.p, std::nullopt));
    const auto inv = curve_invariants(np);
    Claim1Report rep{ls, lattice_width(np.support()), inv.genus, inv.punctures,
                     inv.hyperelliptic_family, ""};
    const bool fits = ls.q == 1 || ls.q == ls.p - 1;
    rep.verdict = fits ? "DUALITY-CONSISTENT" : "OBSTRUCTED";
    return rep;
}

double sokhotski_check(const Density& f, const std::vector<double>& eval_points) {
    const double a = f.grid.front(), b = f.grid.back();
    const auto fl = [&](double w) { return interp(f, w); };

    double prev_err = 0.0, extrapolated = 0.0;
    bool have_prev = false;
    for (double eps : {1e-2, 1e-3, 1e-4}) {
        double err = 0.0;
        for (double x0 : eval_points) {
            // regularized convolutions, split at the kernel center with a
            // sinh substitution so the eps-scale feature is resolved
            const double delta = std::min({0.25, x0 - a, b - x0});
            const auto conv = [&](double sgn) {
                cplx total = 0.0;
                auto piece = [&](double lo, double hi) {
                    total += adaptive_gk15(
                                 [&](double w) -> cplx {
                                     return fl(w) * (1.0 / std::tanh(cplx(x0 - w, sgn * eps)));
                                 },
                                 lo, hi, 1e-11, 1e-9)
                                 .value;
                };
                piece(a, x0 - delta);
                piece(x0 + delta, b);
                const double smax = std::asinh(delta / eps);
                total += adaptive_gk15(
                             [&](double s) -> cplx {
                                 const double u = eps * std::sinh(s);
                                 return fl(x0 + u) * eps * std::cosh(s) /
                                        std::tanh(cplx(-u, sgn * eps));
                             },
                             -smax, smax, 1e-11, 1e-9)
                             .value;
                return total;
            };
            const cplx cp = conv(1.0), cm = conv(-1.0);

            // principal value: subtract the plateau, integrate the remainder,
            // add the closed form of the plateau part
            const double f0 = fl(x0);
            cplx pv = adaptive_gk15(
                          [&](double w) -> cplx {
                              const double d = x0 - w;
                              if (std::abs(d) < 1e-13) return 0.0;
                              return (fl(w) - f0) / std::tanh(d);
                          },
                          a, b, 1e-11, 1e-9)
                          .value;
            pv += f0 * (std::log(std::abs(std::sinh(x0 - a))) -
                        std::log(std::abs(std::sinh(x0 - b))));

            err = std::max(err, std::abs(cp + cm - 2.0 * pv));
            err = std::max(err, std::abs(cp - cm + cplx(0.0, 2.0 * kPi) * f0));
        }
        extrapolated = have_prev && err < prev_err ? err * (err / prev_err) : err;
        prev_err = err;
        have_prev = true;
    }
    return extrapolated;
}

}  // namespace lenscs
