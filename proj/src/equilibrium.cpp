#include "lenscs/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "lenscs/numerics.hpp"

namespace lenscs {

namespace {

constexpr double kPi = std::numbers::pi;

// Re coth(D/2 + i theta) = sinh D / (cosh D - cos 2 theta)
double kernel(double d, double cos2t) { return std::sinh(d) / (std::cosh(d) - cos2t); }

// d/dD of the above
double kernel_d(double d, double cos2t) {
    const double den = std::cosh(d) - cos2t;
    return (1.0 - std::cosh(d) * cos2t) / (den * den);
}

// Largest-remainder split of N proportional to the fillings.
std::vector<int> apportion(int N, const TooftData& data) {
    const std::size_t p = data.fillings.size();
    std::vector<int> n(p);
    std::vector<std::pair<double, std::size_t>> rem(p);
    int assigned = 0;
    for (std::size_t i = 0; i < p; ++i) {
        const double exact = N * data.fillings[i] / data.t;
        n[i] = static_cast<int>(std::floor(exact));
        assigned += n[i];
        rem[i] = {exact - std::floor(exact), i};
    }
    std::sort(rem.begin(), rem.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (int k = 0; k < N - assigned; ++k) ++n[rem[static_cast<std::size_t>(k)].second];
    return n;
}

// Quantile of the semicircle law on [-1,1] by bisection on its CDF.
double semicircle_quantile(double u) {
    double lo = -1.0, hi = 1.0;
    for (int it = 0; it < 60; ++it) {
        const double x = 0.5 * (lo + hi);
        const double cdf = 0.5 + (x * std::sqrt(1.0 - x * x) + std::asin(x)) / kPi;
        (cdf < u ? lo : hi) = x;
    }
    return 0.5 * (lo + hi);
}

struct Flat {
    std::vector<double> x;       // all eigenvalues, group-blocked
    std::vector<int> group_of;   // block index per eigenvalue
    std::vector<int> sizes;
};

// Real part of the force vector; infinity-norm returned. Collisions inside a
// group poison the result so the line search backs off.
double force(const Flat& f, int p, int q, double t, std::vector<double>& out) {
    const std::size_t n = f.x.size();
    const double w = t / static_cast<double>(n);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const double d = f.x[i] - f.x[j];
            const int r = f.group_of[i] - f.group_of[j];
            if (r == 0) {
                if (std::abs(d) < 1e-12) return std::numeric_limits<double>::infinity();
                acc += kernel(d, 1.0);
            } else {
                acc += 0.5 * (kernel(d, std::cos(2.0 * kPi * r / p)) +
                              kernel(d, std::cos(2.0 * kPi * q * r / p)));
            }
        }
        out[i] = p * f.x[i] - w * acc;
        worst = std::max(worst, std::abs(out[i]));
    }
    return worst;
}

}  // namespace

TooftData::TooftData(double t_, std::vector<double> fillings_) : t(t_), fillings(std::move(fillings_)) {
    if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
    if (fillings.empty()) throw std::invalid_argument("fillings empty");
    double sum = 0.0;
    for (double s : fillings) {
        if (s < 0.0) throw std::invalid_argument("fillings must be nonnegative");
        sum += s;
    }
    if (std::abs(sum - t) > 1e-9 * t) throw std::invalid_argument("fillings must sum to t");
}

bool TooftData::symmetric() const {
    for (std::size_t i = 2; i < fillings.size(); ++i)
        if (std::abs(fillings[i] - fillings[1]) > 1e-12 * t) return false;
    return true;
}

TooftData symmetric_fillings(int p, double t, double S0) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    if (!(S0 > 0.0 && S0 < t) && p > 1) throw std::invalid_argument("need 0 < S0 < t");
    std::vector<double> s(static_cast<std::size_t>(p), p > 1 ? (t - S0) / (p - 1) : t);
    s[0] = p > 1 ? S0 : t;
    return TooftData(t, std::move(s));
}

EquilibriumConfig saddle_solve(int p, int q, int N, const TooftData& data, double tol,
                               int max_iter) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    if (q < 1 || (p > 1 && std::gcd(p, q) != 1)) throw std::invalid_argument("q must be coprime to p");
    if (static_cast<int>(data.fillings.size()) != p)
        throw std::invalid_argument("fillings size must equal p");
    if (N < 2 * p) throw std::invalid_argument("need N >= 2p");

    const std::vector<int> sizes = apportion(N, data);
    Flat f;
    f.sizes = sizes;
    const double scale = (2.0 / p) * std::acosh(std::exp(0.5 * data.t));
    for (int g = 0; g < p; ++g)
        for (int k = 0; k < sizes[static_cast<std::size_t>(g)]; ++k) {
            f.x.push_back(scale *
                          semicircle_quantile((k + 0.5) / sizes[static_cast<std::size_t>(g)]));
            f.group_of.push_back(g);
        }

    const std::size_t n = f.x.size();
    const double w = data.t / static_cast<double>(n);
    std::vector<double> F(n), Fnew(n), jac(n * n);
    double res = force(f, p, q, data.t, F);

    int it = 0;
    for (; it < max_iter && res >= tol; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            double diag = static_cast<double>(p);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                const double d = f.x[i] - f.x[j];
                const int r = f.group_of[i] - f.group_of[j];
                const double kd = r == 0 ? kernel_d(d, 1.0)
                                         : 0.5 * (kernel_d(d, std::cos(2.0 * kPi * r / p)) +
                                                  kernel_d(d, std::cos(2.0 * kPi * q * r / p)));
                jac[i * n + j] = w * kd;
                diag -= w * kd;
            }
            jac[i * n + i] = diag;
        }
        std::vector<double> step(F);
        std::vector<double> a(jac);
        solve_linear(a, step);  // J step = F, then x -= alpha step

        double alpha = 1.0;
        Flat trial = f;
        bool accepted = false;
        for (int back = 0; back < 30; ++back) {
            for (std::size_t i = 0; i < n; ++i) trial.x[i] = f.x[i] - alpha * step[i];
            const double rnew = force(trial, p, q, data.t, Fnew);
            if (rnew < res) {
                f.x.swap(trial.x);
                F.swap(Fnew);
                res = rnew;
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) break;
    }
    if (res >= tol) throw std::runtime_error("saddle_solve: no convergence");

    // imaginary force diagnostic: Im coth(D/2+it) = -sin 2t/(cosh D - cos 2t)
    double im_worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (f.group_of[j] == f.group_of[i]) continue;
            const double d = f.x[i] - f.x[j];
            const int r = f.group_of[i] - f.group_of[j];
            const double t1 = 2.0 * kPi * r / p, t2 = 2.0 * kPi * q * r / p;
            acc += 0.5 * (-std::sin(t1) / (std::cosh(d) - std::cos(t1)) -
                          std::sin(t2) / (std::cosh(d) - std::cos(t2)));
        }
        im_worst = std::max(im_worst, std::abs(w * acc));
    }

    EquilibriumConfig cfg;
    cfg.groups.resize(static_cast<std::size_t>(p));
    std::size_t at = 0;
    for (int g = 0; g < p; ++g) {
        auto& grp = cfg.groups[static_cast<std::size_t>(g)];
        grp.assign(f.x.begin() + static_cast<std::ptrdiff_t>(at),
                   f.x.begin() + static_cast<std::ptrdiff_t>(at + sizes[static_cast<std::size_t>(g)]));
        std::sort(grp.begin(), grp.end());
        at += static_cast<std::size_t>(sizes[static_cast<std::size_t>(g)]);
    }
    cfg.residual = res;
    cfg.im_residual = im_worst;
    cfg.iterations = it;
    return cfg;
}

EquilibriumConfig saddle_solve(const LensSpace& ls, int N, const TooftData& data, double tol,
                               int max_iter) {
    return saddle_solve(static_cast<int>(ls.p), static_cast<int>(ls.q), N, data, tol, max_iter);
}

double equilibrium_energy(int p, int q, double t, const std::vector<std::vector<double>>& groups) {
    std::size_t n = 0;
    for (const auto& g : groups) n += g.size();
    const double w = t / static_cast<double>(n);
    double conf = 0.0, inter = 0.0;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        for (double x : groups[gi]) conf += 0.5 * p * x * x;
        for (std::size_t i = 0; i < groups[gi].size(); ++i)
            for (std::size_t j = i + 1; j < groups[gi].size(); ++j)
                inter += std::log(std::abs(std::cosh(groups[gi][i] - groups[gi][j]) - 1.0));
        for (std::size_t gj = gi + 1; gj < groups.size(); ++gj) {
            const int r = static_cast<int>(gi) - static_cast<int>(gj);
            const double c1 = std::cos(2.0 * kPi * r / p), c2 = std::cos(2.0 * kPi * q * r / p);
            for (double xi : groups[gi])
                for (double xj : groups[gj])
                    inter += 0.5 * (std::log(std::cosh(xi - xj) - c1) +
                                    std::log(std::cosh(xi - xj) - c2));
        }
    }
    return conf - w * inter;
}

Density empirical_density(const EquilibriumConfig& cfg, const TooftData& data, int group) {
    const auto& g = cfg.groups.at(static_cast<std::size_t>(group));
    if (g.size() < 3) throw std::invalid_argument("empirical_density: group too small");
    const double share = data.fillings.at(static_cast<std::size_t>(group)) /
                         static_cast<double>(g.size());

    Density d;
    d.lo = g.front();
    d.hi = g.back();
    d.filling = data.fillings[static_cast<std::size_t>(group)];
    for (std::size_t k = 0; k + 1 < g.size(); ++k) {
        d.grid.push_back(0.5 * (g[k] + g[k + 1]));
        d.values.push_back(share / (g[k + 1] - g[k]));
    }
    double integral = 0.0;
    for (std::size_t k = 0; k + 1 < d.grid.size(); ++k)
        integral += 0.5 * (d.values[k] + d.values[k + 1]) * (d.grid[k + 1] - d.grid[k]);
    const double fix = d.filling / integral;
    for (double& v : d.values) v *= fix;
    return d;
}

double estimate_cut_endpoint(const EquilibriumConfig& cfg, int group) {
    const auto& g = cfg.groups.at(static_cast<std::size_t>(group));
    if (g.empty()) throw std::invalid_argument("estimate_cut_endpoint: empty group");
    if (g.size() < 6) return std::max(std::abs(g.front()), std::abs(g.back()));

    const auto edge_fit = [&](bool top) {
        double lam[3];
        for (int k = 0; k < 3; ++k)
            lam[k] = top ? g[g.size() - 1 - static_cast<std::size_t>(k)]
                         : -g[static_cast<std::size_t>(k)];
        // lam_k = a - b u^{2/3} - c u^{4/3}, u = k + 3/4: equilibrium points
        // count like orthogonal-polynomial zeros at a soft edge (Airy), not
        // like midpoint quantiles, and the 3/4 offset is what extrapolates
        // to the continuum endpoint without an O(n^{-2/3}) bias
        std::vector<double> m(9), rhs(3);
        for (int k = 0; k < 3; ++k) {
            const double u = k + 0.75;
            m[static_cast<std::size_t>(3 * k)] = 1.0;
            m[static_cast<std::size_t>(3 * k + 1)] = -std::pow(u, 2.0 / 3.0);
            m[static_cast<std::size_t>(3 * k + 2)] = -std::pow(u, 4.0 / 3.0);
            rhs[static_cast<std::size_t>(k)] = lam[k];
        }
        solve_linear(m, rhs);
        return rhs[0];
    };
    return 0.5 * (edge_fit(true) + edge_fit(false));
}

}  // namespace lenscs
