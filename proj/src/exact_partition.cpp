#include "lenscs/exact_partition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lenscs/root_system.hpp"

namespace lenscs {

namespace {

void enumerate_multisets(int p, int slots, int maxval, std::vector<int>& cur,
                         std::vector<FlatConnection>& out) {
    if (slots == 0) {
        out.push_back({cur});
        return;
    }
    for (int v = maxval; v >= 0; --v) {
        cur.push_back(v);
        enumerate_multisets(p, slots - 1, v, cur, out);
        cur.pop_back();
    }
}

double orbit_size(const std::vector<int>& m) {
    double size = 1.0;
    for (std::size_t i = 1; i <= m.size(); ++i) size *= static_cast<double>(i);
    std::size_t i = 0;
    while (i < m.size()) {
        std::size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        for (std::size_t r = 2; r <= j - i; ++r) size /= static_cast<double>(r);
        i = j;
    }
    return size;
}

}  // namespace

std::vector<FlatConnection> flat_connections(int p, int N) {
    if (p < 1 || N < 1) throw std::invalid_argument("p and N must be positive");
    std::vector<FlatConnection> out;
    std::vector<int> cur;
    enumerate_multisets(p, N, p - 1, cur, out);
    return out;
}

FlatConnection canonical_flat(const LensSpace& ls, std::vector<int> m) {
    const int p = static_cast<int>(ls.p);
    for (auto& v : m) v = ((v % p) + p) % p;
    std::sort(m.begin(), m.end(), std::greater<>());
    return {std::move(m)};
}

ExactCSInput::ExactCSInput(LensSpace l, int n, cplx gs, std::vector<int> mm)
    : ls(l), N(n), coupling(gs), m(std::move(mm)) {
    if (N < 1) throw std::invalid_argument("N must be positive");
    if (coupling == cplx{0.0, 0.0}) throw std::invalid_argument("coupling must be nonzero");
    if (static_cast<int>(m.size()) != N) throw std::invalid_argument("m must have N entries");
}

ExactCSInput ExactCSInput::from_level(LensSpace l, int n, int k, std::vector<int> mm) {
    if (k + n == 0) throw std::invalid_argument("k + N must be nonzero");
    const cplx g2 = cplx{0.0, 4.0 * std::numbers::pi} / static_cast<double>(k + n);
    return ExactCSInput(l, n, std::sqrt(g2), std::move(mm));
}

PartitionValue z_exact(const ExactCSInput& input, int budget_n) {
    const int N = input.N;
    if (N > budget_n) throw BudgetError("permutation sum budget exceeded");
    const double p = static_cast<double>(input.ls.p);
    const double q = static_cast<double>(input.ls.q);
    const cplx g2 = input.coupling * input.coupling;

    const auto mc = canonical_flat(input.ls, input.m).m;
    double m2 = 0;
    for (int v : mc) m2 += static_cast<double>(v) * static_cast<double>(v);

    const auto rho = root_data(N).weyl_vector;
    const auto tab = permutation_table(N);
    const std::size_t nperm = tab.perms.size();

    // per-permutation data: sign * e^{(g_s^2/2p) w(rho).rho} and the vector w(rho)
    std::vector<cplx> wfac(nperm);
    std::vector<std::vector<double>> wrho(nperm, std::vector<double>(static_cast<std::size_t>(N)));
    for (std::size_t w = 0; w < nperm; ++w) {
        double dot = 0;
        for (int i = 0; i < N; ++i) {
            const double r = rho[static_cast<std::size_t>(tab.perms[w][static_cast<std::size_t>(i)])];
            wrho[w][static_cast<std::size_t>(i)] = r;
            dot += r * rho[static_cast<std::size_t>(i)];
        }
        wfac[w] = static_cast<double>(tab.signs[w]) * std::exp(g2 / (2.0 * p) * dot);
    }

    const double two_pi_over_p = 2.0 * std::numbers::pi / p;
    KahanSumComplex acc;
    for (std::size_t wt = 0; wt < nperm; ++wt) {
        std::vector<double> mt(static_cast<std::size_t>(N));
        for (int i = 0; i < N; ++i)
            mt[static_cast<std::size_t>(i)] =
                static_cast<double>(mc[static_cast<std::size_t>(tab.perms[wt][static_cast<std::size_t>(i)])]);
        for (std::size_t w = 0; w < nperm; ++w) {
            double phase = 0;
            for (int i = 0; i < N; ++i)
                phase += mt[static_cast<std::size_t>(i)] *
                         (q * rho[static_cast<std::size_t>(i)] + wrho[w][static_cast<std::size_t>(i)]);
            acc.add(wfac[w] * std::exp(cplx(0.0, two_pi_over_p * phase)));
        }
    }

    const cplx pref = std::exp(-4.0 * std::numbers::pi * std::numbers::pi * q * m2 / (g2 * p));
    return {pref * acc.value(), "C_N=1"};
}

cplx flat_sector_phase(const LensSpace& ls, int N, const FlatConnection& m) {
    long sum = 0;
    for (int v : m.m) sum += v;
    const double arg = std::numbers::pi * static_cast<double>(N - 1) *
                       static_cast<double>(ls.q + 1) * static_cast<double>(sum) /
                       static_cast<double>(ls.p);
    return std::polar(1.0, arg);
}

PartitionValue z_full(const LensSpace& ls, int N, int k, bool orbit_weights, int budget_n) {
    // The half-integer Weyl vector makes each sector term flip sign under
    // m_i -> m_i + p when N is even. Multiplying sector Z(m) by the unit phase
    // exp(i pi (N-1)(q+1) sum(m)/p) is the same as redoing the double sum with
    // the integer vector rho + (N-1)/2*(1,..,1), whose summands are p-periodic
    // in every m_i. Only the phased sum is stable across homeomorphic
    // presentations (and then only at levels with q*(k+N)*p even).
    KahanSumComplex acc;
    for (const auto& fc : flat_connections(static_cast<int>(ls.p), N)) {
        auto in = ExactCSInput::from_level(ls, N, k, fc.m);
        cplx z = flat_sector_phase(ls, N, fc) * z_exact(in, budget_n).value;
        if (orbit_weights) z *= orbit_size(fc.m);
        acc.add(z);
    }
    return {acc.value(), orbit_weights ? "C_N=1;sector-phased;orbit-weighted"
                                       : "C_N=1;sector-phased;orbit-representatives"};
}

}
