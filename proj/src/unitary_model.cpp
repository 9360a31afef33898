#include "lenscs/unitary_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lenscs {

namespace {

cplx det_lu(std::vector<std::vector<cplx>> m) {
    const std::size_t n = m.size();
    cplx det = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        if (m[piv][c] == cplx{0.0, 0.0}) return 0.0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const cplx f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

double vandermonde(const std::vector<double>& a) {
    double d = 1.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) d *= a[j] - a[i];
    return d;
}

}  // namespace

cplx iz_integral(const IZInput& inp) {
    const std::size_t n = inp.a.size();
    if (inp.b.size() != n || n == 0) throw std::invalid_argument("iz_integral: size mismatch");
    const double da = vandermonde(inp.a), db = vandermonde(inp.b);
    if (da == 0.0 || db == 0.0)
        throw std::invalid_argument("iz_integral: entries must be distinct");
    if (n == 1) return std::exp(inp.beta * inp.a[0] * inp.b[0]);

    std::vector<std::vector<cplx>> k(n, std::vector<cplx>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) k[i][j] = std::exp(inp.beta * inp.a[i] * inp.b[j]);

    double cn = 1.0, f = 1.0;
    for (std::size_t kk = 1; kk + 1 <= n; ++kk) {
        f *= static_cast<double>(kk);
        cn *= f;
    }
    const int M = static_cast<int>(n * (n - 1) / 2);
    return cn * det_lu(std::move(k)) / (std::pow(inp.beta, M) * da * db);
}

cplx z_unitary_chain(const LensSpace& ls, int N, double g_s) {
    if (N < 1) throw std::invalid_argument("N must be positive");
    if (!(g_s > 0.0)) throw std::invalid_argument("g_s must be positive");
    const double p = static_cast<double>(ls.p);
    const double q = static_cast<double>(ls.q);
    const double nd = static_cast<double>(N);
    const int M = N * (N - 1) / 2;
    constexpr double kPi = std::numbers::pi;

    // Each sinh product expands through the antisymmetrized exponential sum
    // over S_N with the staggered vector r = ((N-1)/2, ..., -(N-1)/2). The
    // Gaussian moments collapse the double permutation sum to N! times
    // det(exp(beta r_i r_j)), beta = g_s/2p, and row/column scaling trades
    // r for (1..N) at the cost of exp(-N beta (N+1)^2 / 4). What remains is
    // the two-matrix kernel at coincident spectra a = b = (1..N).
    const double s = p / (g_s * q);
    const double beta = g_s / (2.0 * p);
    const double E = g_s * (1.0 + q * q) * nd * (nd * nd - 1.0) / (48.0 * p * q) -
                     g_s * nd * (nd + 1.0) * (nd + 1.0) / (8.0 * p);

    double nfact = 1.0, supfact = 1.0, fact = 1.0;
    for (int j = 1; j <= N; ++j) {
        fact *= static_cast<double>(j);
        nfact = fact;
        if (j < N) supfact *= fact;  // prod_{k<N} k!
    }

    std::vector<double> a(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) a[static_cast<std::size_t>(i)] = static_cast<double>(i + 1);
    const cplx iz = iz_integral({a, a, cplx(beta, 0.0)});

    return std::pow(kPi / s, 0.5 * nd) * std::pow(4.0, -M) * nfact * std::pow(beta, M) *
           supfact * std::exp(E) * iz;
}

}  // namespace lenscs
