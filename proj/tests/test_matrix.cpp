#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "lenscs/exact_partition.hpp"
#include "lenscs/matrix_integrals.hpp"
#include "lenscs/quadrature.hpp"
#include "lenscs/root_system.hpp"
#include "lenscs/unitary_model.hpp"

using namespace lenscs;

namespace {

constexpr double kPi = std::numbers::pi;

// z_quadrature(m) / z_exact(m) at real coupling: Gaussian volume times the
// 2^{-2M} from the missing sinh prefactors times the Weyl-vector Gaussian.
double quad_to_exact_constant(int p, int N, double gs) {
    const int M = N * (N - 1) / 2;
    const double rho2 = N * (N * N - 1) / 12.0;
    return std::pow(kPi / (gs * p), 0.5 * N) * std::pow(4.0, -M) *
           std::exp(gs / (2.0 * p) * rho2);
}

cplx z_ht(const LensSpace& ls, int N, double gs, std::vector<int> m) {
    return z_exact(ExactCSInput(ls, N, cplx(std::sqrt(gs), 0.0), std::move(m))).value;
}

// Haar integral over U(2) of e^{beta Tr(U diag(a) U^+ diag(b))}. The trace
// depends only on the mixing angle, Tr = c X + (1-c) Y with c = cos^2(theta),
// X = a1 b1 + a2 b2, Y = a1 b2 + a2 b1; the two phase angles integrate to 1.
// Haar density in theta is sin(2 theta) on [0, pi/2].
cplx u2_direct(const std::vector<double>& a, const std::vector<double>& b, cplx beta) {
    const double X = a[0] * b[0] + a[1] * b[1];
    const double Y = a[0] * b[1] + a[1] * b[0];
    auto f = [&](double th) -> cplx {
        const double c = std::cos(th) * std::cos(th);
        return std::sin(2.0 * th) * std::exp(beta * (c * X + (1.0 - c) * Y));
    };
    return adaptive_gk15(f, 0.0, kPi / 2.0, 1e-14, 1e-12).value;
}

}  // namespace

TEST_CASE("quadrature: panels, tails, oscillation") {
    auto sq = adaptive_gk15([](double x) -> cplx { return x * x; }, 0.0, 1.0, 1e-15, 1e-14);
    CHECK(std::abs(sq.value - 1.0 / 3.0) < 1e-14);
    CHECK(sq.evaluations >= 15);

    auto gauss = adaptive_gk15([](double x) -> cplx { return std::exp(-x * x); }, -8.0, 8.0,
                               1e-15, 1e-13);
    CHECK(std::abs(gauss.value - std::sqrt(kPi)) < 1e-13);

    // frequency 6: value ~2e-4, a tight relative target is reachable
    auto osc6 = adaptive_gk15([](double x) -> cplx { return std::exp(cplx(-x * x, 6.0 * x)); },
                              -8.0, 8.0, 1e-18, 1e-12);
    const cplx expect6 = std::sqrt(kPi) * std::exp(-9.0);
    CHECK(std::abs(osc6.value - expect6) < 1e-10 * std::abs(expect6));

    // frequency 10: value ~2e-11 rides on O(1) panel cancellation, so the
    // attainable error is the machine floor of the panel sums, not relative
    auto osc = adaptive_gk15([](double x) -> cplx { return std::exp(cplx(-x * x, 10.0 * x)); },
                             -8.0, 8.0, 1e-18, 1e-12);
    const cplx expect = std::sqrt(kPi) * std::exp(-25.0);
    CHECK(std::abs(osc.value - expect) < 1e-13);

    auto g2 = tensor_quadrature(
        [](const std::vector<double>& x) -> cplx { return std::exp(-x[0] * x[0] - x[1] * x[1]); },
        2, 6.0, 1e-13, 1e-11);
    CHECK(std::abs(g2.value - kPi) < 1e-10);

    auto g3 = tensor_quadrature(
        [](const std::vector<double>& x) -> cplx {
            return std::exp(-x[0] * x[0] - x[1] * x[1] - x[2] * x[2]);
        },
        3, 6.0, 1e-12, 1e-10);
    CHECK(std::abs(g3.value - std::pow(kPi, 1.5)) < 1e-9);
}

TEST_CASE("integrand: small cases and the representation map") {
    // N=1: pure Gaussian times label phase
    MatrixModelSpec s1(LensSpace{3, 2}, 1, 0.5, {1}, MatrixRep::MMCS);
    const double x0 = 0.37;
    const cplx expect = std::exp(cplx(-0.5 * 3 * x0 * x0, 4.0 * kPi * x0));
    CHECK(std::abs(integrand(s1, std::vector<double>{x0}) - expect) < 1e-15);

    // trivial label: real nonnegative integrand
    MatrixModelSpec s2(LensSpace{2, 1}, 2, 0.4, {0, 0}, MatrixRep::MMCS);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int t = 0; t < 10; ++t) {
        const cplx v = integrand(s2, std::vector<double>{dist(rng), dist(rng)});
        CHECK(std::abs(v.imag()) < 1e-16);
        CHECK(v.real() >= 0.0);
    }

    // MMCS at x maps to MMCS2 at u = g_s x - 2 pi i m / p with one constant ratio
    for (auto [p, q, gs, mv] : {std::tuple<int, int, double, std::vector<int>>{2, 1, 0.7, {1, 0}},
                                {3, 2, 0.5, {2, 1, 0}}}) {
        const int N = static_cast<int>(mv.size());
        MatrixModelSpec a(LensSpace{p, q}, N, gs, mv, MatrixRep::MMCS);
        MatrixModelSpec b(LensSpace{p, q}, N, gs, mv, MatrixRep::MMCS2);
        double m2 = 0;
        for (int v : a.m) m2 += v * v;
        const cplx expect_ratio = std::exp(cplx(-4.0 * kPi * kPi * m2 / (gs * p), 0.0));
        for (int t = 0; t < 10; ++t) {
            std::vector<double> x(static_cast<std::size_t>(N));
            for (auto& xi : x) xi = dist(rng);
            std::vector<cplx> u(static_cast<std::size_t>(N));
            for (int i = 0; i < N; ++i)
                u[static_cast<std::size_t>(i)] =
                    gs * x[static_cast<std::size_t>(i)] -
                    cplx(0.0, 2.0 * kPi * a.m[static_cast<std::size_t>(i)] / p);
            const cplx ratio = integrand(a, x) / integrand(b, u);
            CHECK(std::abs(ratio - expect_ratio) < 1e-12 * std::abs(expect_ratio));
        }
    }

    // group sizes count label multiplicities
    MatrixModelSpec g(LensSpace{3, 1}, 3, 0.5, {2, 0, 0}, MatrixRep::MMCS2);
    CHECK(g.group_sizes() == std::vector<int>{2, 0, 1});
    CHECK(g.m == std::vector<int>{0, 0, 2});

    CHECK_THROWS_AS(MatrixModelSpec(LensSpace{3, 1}, 2, 0.5, {1, 0}, MatrixRep::MMCS1a),
                    std::invalid_argument);
    CHECK_THROWS_AS(MatrixModelSpec(LensSpace{3, 1}, 2, -0.5, {0, 0}, MatrixRep::MMCS),
                    std::invalid_argument);
}

TEST_CASE("z_quadrature: one-dimensional closed forms") {
    for (auto [p, q, gs] : {std::tuple{2, 1, 0.5}, {3, 1, 0.8}}) {
        for (int m1 : {0, 1}) {
            MatrixModelSpec s(LensSpace{p, q}, 1, gs, {m1}, MatrixRep::MMCS);
            const double expect =
                std::sqrt(kPi / (gs * p)) * std::exp(-4.0 * kPi * kPi * m1 * m1 / (gs * p));
            const auto r = z_quadrature(s);
            CHECK(std::abs(r.value - expect) < 1e-10 * expect);
            CHECK(r.abs_error_estimate >= 0.0);
            CHECK(r.evaluations > 0);
        }
    }
    // same value through the grouped representation
    MatrixModelSpec s2(LensSpace{3, 2}, 1, 0.6, {1}, MatrixRep::MMCS2);
    const double expect2 =
        std::sqrt(kPi / (0.6 * 3)) * std::exp(-4.0 * kPi * kPi * 2.0 * 1.0 / (0.6 * 3));
    CHECK(std::abs(z_quadrature(s2).value - expect2) < 1e-9 * expect2);

    MatrixModelSpec s3(LensSpace{5, 3}, 1, 0.7, {0}, MatrixRep::MMCS1a);
    CHECK(std::abs(z_quadrature(s3).value - std::sqrt(kPi * 0.7 * 3 / 5)) < 1e-10);

    std::vector<int> m4(4, 0);
    CHECK_THROWS_AS(z_quadrature(MatrixModelSpec(LensSpace{2, 1}, 4, 0.5, m4, MatrixRep::MMCS)),
                    BudgetError);
}

TEST_CASE("z_quadrature: constant ratio to the permutation sum") {
    // the dropped normalization is an explicit label-independent constant
    for (auto [p, q, gs, mv] :
         {std::tuple<int, int, double, std::vector<int>>{3, 2, 0.3, {1, 0}},
          {2, 1, 0.6, {1, 1}},
          {3, 1, 0.5, {2, 1}},
          {5, 3, 0.4, {1, 0}}}) {
        const int N = static_cast<int>(mv.size());
        MatrixModelSpec s(LensSpace{p, q}, N, gs, mv, MatrixRep::MMCS);
        const cplx zq = z_quadrature(s).value;
        const cplx zh = z_ht(LensSpace{p, q}, N, gs, mv);
        const double k = quad_to_exact_constant(p, N, gs);
        CHECK(std::abs(zq / zh - k) < 1e-7 * k);
    }
    // one three-eigenvalue case at a looser target
    {
        MatrixModelSpec s(LensSpace{3, 2}, 3, 0.5, {2, 1, 0}, MatrixRep::MMCS);
        const cplx zq = z_quadrature(s, 1e-7).value;
        const cplx zh = z_ht(LensSpace{3, 2}, 3, 0.5, {2, 1, 0});
        const double k = quad_to_exact_constant(3, 3, 0.5);
        CHECK(std::abs(zq / zh - k) < 1e-5 * k);
    }
    // spec-level ratio form: quadrature ratios equal permutation-sum ratios
    {
        MatrixModelSpec a(LensSpace{3, 2}, 1, 0.5, {1}, MatrixRep::MMCS);
        MatrixModelSpec b(LensSpace{3, 2}, 1, 0.5, {0}, MatrixRep::MMCS);
        const cplx lhs = z_quadrature(a).value / z_quadrature(b).value;
        const cplx rhs = z_ht(LensSpace{3, 2}, 1, 0.5, {1}) / z_ht(LensSpace{3, 2}, 1, 0.5, {0});
        CHECK(std::abs(lhs - rhs) < 1e-6 * std::abs(rhs));
    }
}

TEST_CASE("z_quadrature: the two eigenvalue representations agree identically") {
    for (auto [p, q, gs, mv] :
         {std::tuple<int, int, double, std::vector<int>>{2, 1, 0.3, {1, 0}},
          {3, 2, 0.6, {2, 0}},
          {5, 2, 0.5, {3, 3}}}) {
        const int N = static_cast<int>(mv.size());
        const cplx za = z_quadrature(MatrixModelSpec(LensSpace{p, q}, N, gs, mv, MatrixRep::MMCS)).value;
        const cplx zb = z_quadrature(MatrixModelSpec(LensSpace{p, q}, N, gs, mv, MatrixRep::MMCS2)).value;
        CHECK(std::abs(za - zb) < 1e-7 * std::abs(za));
    }
}

TEST_CASE("z_monte_carlo: consistency and determinism") {
    // N=1 Gaussian against the analytic value
    MatrixModelSpec s1(LensSpace{2, 1}, 1, 0.5, {0}, MatrixRep::MMCS);
    const auto mc1 = z_monte_carlo(s1, 20000, 11);
    CHECK(std::abs(mc1.value - std::sqrt(kPi / 1.0)) <= 3.0 * std::max(mc1.abs_error_estimate, 1e-15));

    // deterministic per seed
    const auto mc1b = z_monte_carlo(s1, 20000, 11);
    CHECK(mc1.value == mc1b.value);
    CHECK(mc1.abs_error_estimate == mc1b.abs_error_estimate);

    // against quadrature where both run
    MatrixModelSpec s2(LensSpace{2, 1}, 2, 0.3, {0, 0}, MatrixRep::MMCS);
    const auto q2 = z_quadrature(s2);
    const auto mc2 = z_monte_carlo(s2, 60000, 5);
    CHECK(std::abs(mc2.value - q2.value) <= 3.0 * mc2.abs_error_estimate);

    // N=4 is beyond the quadrature budget; compare against the permutation sum
    std::vector<int> m0(4, 0);
    for (double gs : {0.5, 0.8}) {
        MatrixModelSpec s4(LensSpace{2, 1}, 4, gs, m0, MatrixRep::MMCS);
        const auto mc4 = z_monte_carlo(s4, 60000, 17);
        const cplx expect = quad_to_exact_constant(2, 4, gs) * z_ht(LensSpace{2, 1}, 4, gs, m0);
        CHECK(std::abs(mc4.value - expect) <= 3.0 * mc4.abs_error_estimate);
    }

    CHECK_THROWS_AS(z_monte_carlo(s1, 0, 1), std::invalid_argument);
}

TEST_CASE("iz_integral: closed kernel") {
    CHECK(std::abs(iz_integral({{1.7}, {-0.4}, cplx(0.9, 0.0)}) - std::exp(0.9 * 1.7 * -0.4)) <
          1e-15);

    // N=2 printed kernel
    {
        const cplx beta(1.0, 0.0);
        const cplx direct = (std::exp(2.0) - std::exp(1.0)) / 1.0;  // det/(beta D D)
        CHECK(std::abs(iz_integral({{1.0, 2.0}, {0.0, 1.0}, beta}) - direct) < 1e-14);
    }

    // Haar normalization: beta -> 0 gives 1
    CHECK(std::abs(iz_integral({{1.0, 2.0}, {0.3, -0.7}, cplx(1e-4, 0.0)}) - 1.0) < 1e-3);

    // direct group quadrature, real and complex couplings
    for (cplx beta : {cplx(0.8, 0.0), cplx(0.35, 0.45)}) {
        const std::vector<double> a{1.0, 2.0}, b{0.3, -0.7};
        const cplx lhs = iz_integral({a, b, beta});
        const cplx rhs = u2_direct(a, b, beta);
        CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
    }

    CHECK_THROWS_AS(iz_integral({{1.0, 1.0}, {0.0, 1.0}, cplx(1.0, 0.0)}), std::invalid_argument);
}

TEST_CASE("unitary chain: exact evaluation of the m=0 integral") {
    // N=1 closed form
    for (auto [p, q, gs] : {std::tuple{2, 1, 0.4}, {3, 2, 0.7}, {5, 3, 0.9}}) {
        const cplx z = z_unitary_chain(LensSpace{p, q}, 1, gs);
        CHECK(std::abs(z - std::sqrt(kPi * gs * q / p)) < 1e-14 * std::abs(z));
    }

    // N=2 closed form of the integral itself
    for (auto [p, q, gs] : {std::tuple{2, 1, 0.5}, {3, 2, 0.6}}) {
        const double c = kPi * gs * q / (2.0 * p);
        const double expect = c * (std::exp(gs * (q + 1) * (q + 1) / (8.0 * p * q)) -
                                   std::exp(gs * (q - 1) * (q - 1) / (8.0 * p * q)));
        CHECK(std::abs(z_unitary_chain(LensSpace{p, q}, 2, gs) - expect) < 1e-12 * expect);
        MatrixModelSpec s(LensSpace{p, q}, 2, gs, {0, 0}, MatrixRep::MMCS1a);
        CHECK(std::abs(z_quadrature(s).value - expect) < 1e-8 * expect);
    }

    // chain / quadrature constant (here: equal) across couplings
    for (auto [p, q] : {std::pair{2, 1}, {3, 2}}) {
        for (int N : {1, 2}) {
            std::vector<int> m0(static_cast<std::size_t>(N), 0);
            for (double gs : {0.2, 0.4, 0.8}) {
                MatrixModelSpec s(LensSpace{p, q}, N, gs, m0, MatrixRep::MMCS1a);
                const cplx ratio = z_unitary_chain(LensSpace{p, q}, N, gs) / z_quadrature(s).value;
                CHECK(std::abs(ratio - 1.0) < 1e-6);
            }
        }
    }

    // a third eigenvalue count pins the N-dependent combinatorial factors
    {
        MatrixModelSpec s(LensSpace{2, 1}, 3, 0.5, {0, 0, 0}, MatrixRep::MMCS1a);
        const cplx ratio = z_unitary_chain(LensSpace{2, 1}, 3, 0.5) / z_quadrature(s, 1e-8).value;
        CHECK(std::abs(ratio - 1.0) < 1e-6);
    }
}
