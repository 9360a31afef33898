#include "lenscs/matrix_integrals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace lenscs {

namespace {

constexpr double kPi = std::numbers::pi;

// growth rate of the sinh product along one coordinate, used in tail bounds
double sinh_growth(const MatrixModelSpec& s) {
    const double n1 = static_cast<double>(s.N - 1);
    switch (s.rep) {
        case MatrixRep::MMCS:
            return s.g_s * n1;
        case MatrixRep::MMCS2:
            return n1;
        case MatrixRep::MMCS1a:
            return n1 * (static_cast<double>(s.ls.q) + 1.0) / (2.0 * static_cast<double>(s.ls.q));
    }
    return 0.0;
}

// Gaussian decay rate s in e^{-s y^2} of the integration variable actually used
double gauss_rate(const MatrixModelSpec& s) {
    const double p = static_cast<double>(s.ls.p);
    switch (s.rep) {
        case MatrixRep::MMCS:
            return s.g_s * p;
        case MatrixRep::MMCS2:
            return p / s.g_s;
        case MatrixRep::MMCS1a:
            return p / (s.g_s * static_cast<double>(s.ls.q));
    }
    return 1.0;
}

double truncation(const MatrixModelSpec& s) {
    const double rate = gauss_rate(s);
    return std::sqrt(std::log(1e14) / rate) + sinh_growth(s) / (2.0 * rate);
}

template <typename T>
cplx integrand_impl(const MatrixModelSpec& spec, const std::vector<T>& x) {
    const double p = static_cast<double>(spec.ls.p);
    const double q = static_cast<double>(spec.ls.q);
    const double gs = spec.g_s;

    cplx quad = 0.0, lin = 0.0;
    for (int i = 0; i < spec.N; ++i) quad += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];

    cplx expo;
    switch (spec.rep) {
        case MatrixRep::MMCS:
            for (int i = 0; i < spec.N; ++i)
                lin += static_cast<double>(spec.m[static_cast<std::size_t>(i)]) * x[static_cast<std::size_t>(i)];
            expo = -gs * p * quad + cplx(0.0, 4.0 * kPi) * lin;
            break;
        case MatrixRep::MMCS2:
            expo = -quad * p / gs;  // e^{-u^2 p/(2 g2)} with g2 = gs/2
            break;
        case MatrixRep::MMCS1a:
            expo = -quad * p / (gs * q);
            break;
    }

    cplx prod = std::exp(expo);
    for (int i = 0; i < spec.N; ++i) {
        for (int j = i + 1; j < spec.N; ++j) {
            const cplx dx = x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)];
            const double dm = static_cast<double>(spec.m[static_cast<std::size_t>(i)] -
                                                  spec.m[static_cast<std::size_t>(j)]);
            switch (spec.rep) {
                case MatrixRep::MMCS: {
                    const cplx d = gs / 2.0 * dx;
                    prod *= std::sinh(d + cplx(0.0, kPi * (q - 1.0) * dm / p)) * std::sinh(d);
                    break;
                }
                case MatrixRep::MMCS2: {
                    const cplx d = dx / 2.0;
                    prod *= std::sinh(d + cplx(0.0, kPi * dm / p)) *
                            std::sinh(d + cplx(0.0, kPi * q * dm / p));
                    break;
                }
                case MatrixRep::MMCS1a:
                    prod *= std::sinh(dx / (2.0 * q)) * std::sinh(dx / 2.0);
                    break;
            }
        }
    }
    return prod;
}

// Printed integrand on the contour where its Gaussian is centered: real
// arguments except MMCS, which runs at x = y + 2 pi i m/(g_s p). The label
// phases then sit inside the sinh offsets and the evaluation has no
// exponentially small cancellation.
cplx shifted_integrand(const MatrixModelSpec& spec, const std::vector<double>& y) {
    if (spec.rep != MatrixRep::MMCS) return integrand_impl(spec, y);
    const double gp = spec.g_s * static_cast<double>(spec.ls.p);
    std::vector<cplx> x(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        x[i] = cplx(y[i], 2.0 * kPi * static_cast<double>(spec.m[i]) / gp);
    // remove the constant e^{-4 pi^2 m^2/(g_s p)} the shift produces; it is
    // restored analytically in the normalization below
    double m2 = 0;
    for (int v : spec.m) m2 += static_cast<double>(v) * static_cast<double>(v);
    return integrand_impl(spec, x) * std::exp(4.0 * kPi * kPi * m2 / gp);
}

// analytic prefactor applied to the integral of the (shifted) printed integrand
cplx normalization(const MatrixModelSpec& spec) {
    const double p = static_cast<double>(spec.ls.p);
    const double q = static_cast<double>(spec.ls.q);
    double m2 = 0;
    for (int v : spec.m) m2 += static_cast<double>(v) * static_cast<double>(v);
    switch (spec.rep) {
        case MatrixRep::MMCS:
            // e^{-4 pi^2 (q-1) m^2/(gp)} * [shift constant e^{-4 pi^2 m^2/(gp)}]
            return std::exp(-4.0 * kPi * kPi * q * m2 / (spec.g_s * p));
        case MatrixRep::MMCS2:
            return std::pow(spec.g_s, -spec.N) *
                   std::exp(-4.0 * kPi * kPi * q * m2 / (spec.g_s * p));
        case MatrixRep::MMCS1a:
            return 1.0;
    }
    return 1.0;
}

}  // namespace

MatrixModelSpec::MatrixModelSpec(LensSpace l, int n, double gs, std::vector<int> mm, MatrixRep r)
    : ls(l), N(n), g_s(gs), m(std::move(mm)), rep(r) {
    if (N < 1) throw std::invalid_argument("N must be positive");
    if (!(g_s > 0.0)) throw std::invalid_argument("g_s must be positive");
    if (static_cast<int>(m.size()) != N) throw std::invalid_argument("m must have N entries");
    for (auto& v : m) v = ((v % ls.p) + ls.p) % ls.p;
    std::sort(m.begin(), m.end());
    if (rep == MatrixRep::MMCS1a) {
        for (int v : m)
            if (v != 0) throw std::invalid_argument("MMCS1a is defined for m = 0 only");
    }
}

std::vector<int> MatrixModelSpec::group_sizes() const {
    std::vector<int> sizes(static_cast<std::size_t>(ls.p), 0);
    for (int v : m) ++sizes[static_cast<std::size_t>(v)];
    return sizes;
}

cplx integrand(const MatrixModelSpec& spec, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != spec.N) throw std::invalid_argument("x must have N entries");
    return integrand_impl(spec, x);
}

cplx integrand(const MatrixModelSpec& spec, const std::vector<cplx>& x) {
    if (static_cast<int>(x.size()) != spec.N) throw std::invalid_argument("x must have N entries");
    return integrand_impl(spec, x);
}

QuadratureResult z_quadrature(const MatrixModelSpec& spec, double rel_tol) {
    if (spec.N > 3) throw BudgetError("z_quadrature supports N <= 3");
    const double L = truncation(spec);
    // absolute floor at 1e-13 of the Gaussian volume so near-cancelling inner
    // slices do not chase an unreachable relative target
    const double abs_tol = 1e-13 * std::pow(kPi / gauss_rate(spec), 0.5 * spec.N);
    auto r = tensor_quadrature([&](const std::vector<double>& y) { return shifted_integrand(spec, y); },
                               spec.N, L, abs_tol, rel_tol);
    const cplx norm = normalization(spec);
    r.value *= norm;
    r.abs_error_estimate *= std::abs(norm);
    return r;
}

QuadratureResult z_monte_carlo(const MatrixModelSpec& spec, long samples, unsigned seed) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    const double s = gauss_rate(spec);
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5 / s));

    // proposal density (s/pi)^{N/2} e^{-s y^2} absorbs the Gaussian factor;
    // the per-sample weight is the sinh part times (pi/s)^{N/2}
    const double vol = std::pow(kPi / s, 0.5 * spec.N);
    std::vector<double> y(static_cast<std::size_t>(spec.N));
    KahanSumComplex sum;
    KahanSum sum_sq;
    for (long it = 0; it < samples; ++it) {
        double y2 = 0;
        for (auto& yi : y) {
            yi = gauss(rng);
            y2 += yi * yi;
        }
        const cplx w = shifted_integrand(spec, y) * std::exp(s * y2) * vol;
        sum.add(w);
        sum_sq.add(std::norm(w));
    }
    const cplx mean = sum.value() / static_cast<double>(samples);
    const double var = std::max(0.0, sum_sq.value() / static_cast<double>(samples) - std::norm(mean));
    const cplx norm = normalization(spec);

    QuadratureResult out;
    out.value = norm * mean;
    out.abs_error_estimate =
        std::abs(norm) * std::sqrt(var / static_cast<double>(samples));
    out.evaluations = samples;
    return out;
}

}  // namespace lenscs
