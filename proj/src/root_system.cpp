#include "lenscs/root_system.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lenscs {

RootData root_data(int N) {
    if (N < 1) throw std::invalid_argument("rank must be positive");
    RootData rd;
    rd.rank_n = N;
    rd.weyl_vector.resize(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i)
        rd.weyl_vector[static_cast<std::size_t>(i)] = 0.5 * static_cast<double>(N - 1 - 2 * i);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            std::vector<int> a(static_cast<std::size_t>(N), 0);
            a[static_cast<std::size_t>(i)] = 1;
            a[static_cast<std::size_t>(j)] = -1;
            rd.positive_roots.push_back(std::move(a));
        }
    return rd;
}

PermutationTable permutation_table(int N) {
    PermutationTable t;
    std::vector<int> p(static_cast<std::size_t>(N));
    std::iota(p.begin(), p.end(), 0);
    do {
        int inv = 0;
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j)
                if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inv;
        t.perms.push_back(p);
        t.signs.push_back(inv % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(p.begin(), p.end()));
    return t;
}

cplx weyl_sum(int N, const std::vector<double>& phi) {
    if (static_cast<int>(phi.size()) != N) throw std::invalid_argument("phi size mismatch");
    auto rd = root_data(N);
    auto tab = permutation_table(N);
    KahanSumComplex acc;
    for (std::size_t w = 0; w < tab.perms.size(); ++w) {
        double dot = 0;
        for (int i = 0; i < N; ++i)
            dot += phi[static_cast<std::size_t>(i)] *
                   rd.weyl_vector[static_cast<std::size_t>(tab.perms[w][static_cast<std::size_t>(i)])];
        acc.add(static_cast<double>(tab.signs[w]) * std::exp(cplx(0.0, dot)));
    }
    return acc.value();
}

cplx weyl_product(int N, const std::vector<double>& phi) {
    if (static_cast<int>(phi.size()) != N) throw std::invalid_argument("phi size mismatch");
    cplx prod{1.0, 0.0};
    const cplx i_unit{0.0, 1.0};
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            prod *= 2.0 * i_unit *
                    std::sin(0.5 * (phi[static_cast<std::size_t>(i)] - phi[static_cast<std::size_t>(j)]));
    return prod;
}

}
