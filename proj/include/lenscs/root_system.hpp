#pragma once

#include <vector>

#include "lenscs/numerics.hpp"

namespace lenscs {

struct RootData {
    int rank_n;
    std::vector<double> weyl_vector;               // ((N-1)/2, (N-3)/2, ..., -(N-1)/2)
    std::vector<std::vector<int>> positive_roots;  // e_i - e_j, i < j
};

RootData root_data(int N);

// All permutations of {0..N-1} with signs, in lexicographic order.
struct PermutationTable {
    std::vector<std::vector<int>> perms;
    std::vector<int> signs;
};
PermutationTable permutation_table(int N);

// sum_{w in S_N} sign(w) e^{i phi . w(rho)}
cplx weyl_sum(int N, const std::vector<double>& phi);

// Closed form of the same sum: i^{N(N-1)/2} prod_{i<j} 2 sin((phi_i - phi_j)/2).
// (With the imaginary exponent the sine product carries this i power.)
cplx weyl_product(int N, const std::vector<double>& phi);

}
