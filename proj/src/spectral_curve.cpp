#include "lenscs/spectral_curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace lenscs {

namespace {

constexpr double kPi = std::numbers::pi;

// Quadratic roots of X^2 - g X + c = 0, larger-|.| root computed stably.
std::pair<cplx, cplx> x_roots(cplx g, cplx c) {
    const cplx y = std::sqrt(g * g - 4.0 * c);
    const cplx r1 = std::abs(g + y) >= std::abs(g - y) ? 0.5 * (g + y) : 0.5 * (g - y);
    return {r1, c / r1};
}

// Advance the tracked root to position z; prev is the root value carried in.
cplx step_root(const SpectralCurveQ1& curve, cplx z, cplx prev) {
    const cplx Z = std::exp(z);
    const auto [r1, r2] = x_roots(curve.g(Z), std::exp(curve.t) * std::pow(Z, curve.p));
    return std::abs(r1 - prev) <= std::abs(r2 - prev) ? r1 : r2;
}

double left_start(const SpectralCurveQ1& curve, double amax) {
    return -(amax + (curve.t + 40.0) / curve.p + 1.0);
}

// Horizontal walk grid from x0 to x1 at a fixed height whose distance to the
// nearest cut line is eps; clusters geometrically around the endpoint
// crossings at +-a so the tracked roots can swap smoothly.
std::vector<double> walk_grid(double x0, double x1, double a, double eps, bool near_ray) {
    std::vector<double> xs;
    const double coarse = 0.05;
    for (double x = x0; x < x1; x += coarse) xs.push_back(x);
    xs.push_back(x1);
    if (near_ray) {
        const double fine = std::max(eps, 1e-12) / 4.0;
        for (double s : {-a, a}) {
            if (s <= x0 || s >= x1) continue;
            for (double h = 0.1; h > fine; h *= 0.85) {
                if (s - h > x0) xs.push_back(s - h);
                if (s + h < x1) xs.push_back(s + h);
            }
            xs.push_back(s);
        }
        std::sort(xs.begin(), xs.end());
    }
    return xs;
}

struct PeriodTerm {
    cplx logx;  // unwrapped log X along the contour
    cplx dz;    // z'(theta)
};

}  // namespace

cplx SpectralCurveQ1::g(cplx Z) const {
    cplx acc = 0.0;
    for (std::size_t n = d.size(); n-- > 0;) acc = acc * Z + d[n];
    return acc;
}

std::vector<cplx> curve_branch_points(const SpectralCurveQ1& curve) {
    const std::size_t p = static_cast<std::size_t>(curve.p);
    std::vector<cplx> coeffs(2 * p + 1, 0.0);
    for (std::size_t i = 0; i <= p; ++i)
        for (std::size_t j = 0; j <= p; ++j) coeffs[i + j] += curve.d[i] * curve.d[j];
    coeffs[p] -= 4.0 * std::exp(curve.t);
    return polynomial_roots(coeffs);
}

std::vector<double> cut_endpoints(const SpectralCurveQ1& curve) {
    const auto roots = curve_branch_points(curve);
    const int p = curve.p;
    std::vector<std::vector<double>> by_ray(static_cast<std::size_t>(p));
    for (const cplx& r : roots) {
        const double ang = std::arg(r);
        const double slot = ang * p / (2.0 * kPi);
        const int I = static_cast<int>(std::llround(slot)) % p;
        const int Ipos = I < 0 ? I + p : I;
        // away from equal fillings the saddle contours bend, so branch points
        // sit near the rays rather than on them; only a gross miss means the
        // moduli point is outside the multi-cut phase
        if (std::abs(slot - std::llround(slot)) > 0.15)
            throw std::runtime_error("cut_endpoints: branch point between rays");
        by_ray[static_cast<std::size_t>(Ipos)].push_back(std::abs(r));
    }
    std::vector<double> a(static_cast<std::size_t>(p));
    for (int I = 0; I < p; ++I) {
        auto& pr = by_ray[static_cast<std::size_t>(I)];
        if (pr.size() != 2) throw std::runtime_error("cut_endpoints: ray without a root pair");
        if (std::abs(std::log(pr[0] * pr[1])) > 1e-7)
            throw std::runtime_error("cut_endpoints: root pair not reciprocal");
        a[static_cast<std::size_t>(I)] = std::abs(std::log(std::max(pr[0], pr[1])));
    }
    return a;
}

cplx resolvent(const SpectralCurveQ1& curve, cplx z) {
    const auto a = cut_endpoints(curve);
    const double amax = *std::max_element(a.begin(), a.end());
    const double x0 = left_start(curve, amax);

    // distance from the walk height to the nearest cut line (cylinder metric)
    double eps = std::numeric_limits<double>::infinity();
    int ray = 0;
    for (int I = -curve.p; I <= 2 * curve.p; ++I) {
        const double d = std::abs(z.imag() - 2.0 * kPi * I / curve.p);
        if (d < eps) {
            eps = d;
            ray = ((I % curve.p) + curve.p) % curve.p;
        }
    }
    const double aray = a[static_cast<std::size_t>(ray)];
    if (eps < 1e-12 && std::abs(z.real()) < aray + 1e-12)
        throw std::invalid_argument("resolvent: z on a cut");

    const auto xs = walk_grid(x0, z.real(), aray, eps, eps < 0.05);
    cplx track = 1.0;
    for (double x : xs) track = step_root(curve, cplx(x, z.imag()), track);
    return 2.0 * std::log(track) - curve.t;  // |Arg| < pi on the walk end value
}

cplx a_period(const SpectralCurveQ1& curve, int I, double rel_tol) {
    const auto a = cut_endpoints(curve);
    const double aI = a.at(static_cast<std::size_t>(I));
    if (aI < 1e-9) return 0.0;
    const double A = 1.5 * aI;
    const double B = curve.p == 1 ? std::min(A, 2.5)
                                  : std::min(A, 0.55 * 2.0 * kPi / curve.p);
    const cplx center(0.0, 2.0 * kPi * I / curve.p);

    // walk in from the far left at the ellipse-top height
    const double x0 = left_start(curve, *std::max_element(a.begin(), a.end()));
    cplx track = 1.0;
    for (double x = x0; x < 0.0; x += 0.05)
        track = step_root(curve, center + cplx(x, B), track);
    const cplx top = step_root(curve, center + cplx(0.0, B), track);

    cplx prev_val = 0.0;
    for (int M = 64; M <= 4096; M *= 2) {
        cplx x_at = top;
        double arg_acc = std::arg(top);
        KahanSumComplex sum;
        for (int k = 0; k < M; ++k) {
            const double th = 0.5 * kPi + 2.0 * kPi * k / M;
            const cplx z = center + cplx(A * std::cos(th), B * std::sin(th));
            const cplx next = step_root(curve, z, x_at);
            arg_acc += std::arg(next / x_at);
            x_at = next;
            const cplx dz(-A * std::sin(th), B * std::cos(th));
            sum.add(cplx(std::log(std::abs(x_at)), arg_acc) * dz);
        }
        // closure: the tracked root and its unwrapped argument must return
        const cplx back = step_root(curve, center + cplx(0.0, B), x_at);
        if (std::abs(back - top) > 1e-8 * std::abs(top)) continue;
        const cplx val = sum.value() * cplx(0.0, -1.0) / static_cast<double>(M);
        if (M > 64 && std::abs(val - prev_val) <= std::max(1e-12, rel_tol * std::abs(val)))
            return val;
        prev_val = val;
    }
    return prev_val;
}

Density density_from_curve(const SpectralCurveQ1& curve, int I, int npts) {
    const auto a = cut_endpoints(curve);
    const double aI = a.at(static_cast<std::size_t>(I));
    const double theta = 2.0 * kPi * I / curve.p;

    Density out;
    out.lo = -aI;
    out.hi = aI;
    double integral = 0.0;
    double prev_h = 0.0;
    for (int k = 0; k < npts; ++k) {
        const double phi = -0.5 * kPi + kPi * k / (npts - 1);
        const double x = aI * std::sin(phi);
        const cplx Z = std::exp(cplx(x, theta));
        const auto [r1, r2] = x_roots(curve.g(Z), std::exp(curve.t) * std::pow(Z, curve.p));
        const double psi = std::min(std::arg(r1), std::arg(r2));  // upper-limit root
        const double val = std::max(0.0, -psi / kPi);
        out.grid.push_back(x);
        out.values.push_back(val);
        const double h = val * aI * std::cos(phi);
        if (k > 0) integral += 0.5 * (h + prev_h) * (kPi / (npts - 1));
        prev_h = h;
    }
    out.filling = integral;
    return out;
}

SpectralCurveQ1 build_curve_q1(int p, double t, double S0, double tol) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
    const TooftData data = symmetric_fillings(p, t, S0);

    SpectralCurveQ1 curve{p, t, std::vector<double>(static_cast<std::size_t>(p) + 1, 0.0)};
    curve.d[0] = curve.d[static_cast<std::size_t>(p)] = 1.0;
    const int h = p / 2;
    if (h == 0) return curve;

    const auto apply = [&](const std::vector<double>& u) {
        for (int n = 1; n <= h; ++n) {
            curve.d[static_cast<std::size_t>(n)] = u[static_cast<std::size_t>(n - 1)];
            curve.d[static_cast<std::size_t>(p - n)] = u[static_cast<std::size_t>(n - 1)];
        }
    };
    const auto residual = [&](const std::vector<double>& u, std::vector<double>& r) {
        apply(u);
        try {
            for (int I = 0; I < h; ++I)
                r[static_cast<std::size_t>(I)] =
                    a_period(curve, I).real() - data.fillings[static_cast<std::size_t>(I)];
        } catch (const std::runtime_error&) {
            return std::numeric_limits<double>::infinity();
        }
        double worst = 0.0;
        for (double v : r) worst = std::max(worst, std::abs(v));
        return worst;
    };

    std::vector<double> u(static_cast<std::size_t>(h), 0.0), r(u.size()), rt(u.size());
    double res = residual(u, r);
    for (int it = 0; it < 60 && res >= tol; ++it) {
        std::vector<double> jac(u.size() * u.size());
        for (std::size_t k = 0; k < u.size(); ++k) {
            const double step = 1e-6 * std::max(1.0, std::abs(u[k]));
            std::vector<double> up = u;
            up[k] += step;
            if (!std::isfinite(residual(up, rt)))
                throw std::runtime_error("build_curve_q1: left the moduli space");
            for (std::size_t i = 0; i < u.size(); ++i)
                jac[i * u.size() + k] = (rt[i] - r[i]) / step;
        }
        std::vector<double> delta(r);
        solve_linear(jac, delta);
        double alpha = 1.0;
        bool ok = false;
        for (int back = 0; back < 12; ++back) {
            std::vector<double> ut(u.size());
            for (std::size_t k = 0; k < u.size(); ++k) ut[k] = u[k] - alpha * delta[k];
            const double rn = residual(ut, rt);
            if (rn < res) {
                u = std::move(ut);
                r = rt;
                res = rn;
                ok = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!ok) break;
    }
    if (res >= tol) throw std::runtime_error("build_curve_q1: Newton stalled");
    apply(u);
    return curve;
}

}  // namespace lenscs
