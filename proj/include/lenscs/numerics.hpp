#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lenscs {

using cplx = std::complex<double>;

// Compensated (Kahan) accumulator; one per real component keeps complex sums
// deterministic regardless of term magnitudes.
class KahanSum {
  public:
    void add(double x) {
        const double y = x - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class KahanSumComplex {
  public:
    void add(const cplx& z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    cplx value() const { return {re_.value(), im_.value()}; }

  private:
    KahanSum re_, im_;
};

// Dense linear solve with partial pivoting. a is row-major n x n and is
// destroyed; b holds the solution on return.
inline void solve_linear(std::vector<double>& a, std::vector<double>& b) {
    const std::size_t n = b.size();
    if (a.size() != n * n) throw std::invalid_argument("solve_linear: shape mismatch");
    std::vector<std::size_t> piv(n);
    for (std::size_t i = 0; i < n; ++i) piv[i] = i;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        double mag = std::fabs(a[piv[col] * n + col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double m = std::fabs(a[piv[r] * n + col]);
            if (m > mag) {
                mag = m;
                best = r;
            }
        }
        if (mag == 0.0) throw std::runtime_error("solve_linear: singular matrix");
        std::swap(piv[col], piv[best]);
        const double d = a[piv[col] * n + col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[piv[r] * n + col] / d;
            if (f == 0.0) continue;
            a[piv[r] * n + col] = 0.0;
            for (std::size_t c = col + 1; c < n; ++c) a[piv[r] * n + c] -= f * a[piv[col] * n + c];
            b[piv[r]] -= f * b[piv[col]];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[piv[i]];
        for (std::size_t c = i + 1; c < n; ++c) s -= a[piv[i] * n + c] * x[c];
        x[i] = s / a[piv[i] * n + i];
    }
    b = std::move(x);
}

// All roots of sum_k c[k] z^k via Durand-Kerner iteration. Adequate for the
// well-separated low-degree polynomials used here.
std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs, int max_iter = 400, double tol = 1e-13);

// Deterministic standard normal stream (xoshiro-free: splitmix64 + Box-Muller),
// identical output across platforms for a fixed seed.
class NormalStream {
  public:
    explicit NormalStream(std::uint64_t seed) : state_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 1e-300);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        constexpr double two_pi = 6.283185307179586476925286766559;
        spare_ = r * std::sin(two_pi * u2);
        have_spare_ = true;
        return r * std::cos(two_pi * u2);
    }

  private:
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }
    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}
