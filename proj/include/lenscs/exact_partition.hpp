#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lenscs/lens_space.hpp"
#include "lenscs/numerics.hpp"

namespace lenscs {

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Holonomy class label: entries in {0..p-1}, sorted non-increasing.
struct FlatConnection {
    std::vector<int> m;
    bool operator==(const FlatConnection&) const = default;
};

std::vector<FlatConnection> flat_connections(int p, int N);

// Reduce arbitrary integer labels to the canonical representative.
FlatConnection canonical_flat(const LensSpace& ls, std::vector<int> m);

struct ExactCSInput {
    LensSpace ls;
    int N;
    cplx coupling;  // g_s; only g_s^2 enters the sum
    std::vector<int> m;

    ExactCSInput(LensSpace l, int n, cplx gs, std::vector<int> mm);
    // g_s^2 = 4 pi i / (k + N)
    static ExactCSInput from_level(LensSpace l, int n, int k, std::vector<int> mm);
};

struct PartitionValue {
    cplx value;
    std::string convention;
};

// Double permutation sum with overall factor e^{-4 pi^2 q m^2 / (g_s^2 p)};
// the fixed overall constant is set to 1. m is reduced mod p first.
PartitionValue z_exact(const ExactCSInput& input, int budget_n = 7);

// Unit phase exp(i pi (N-1)(q+1) sum(m)/p) attached to a sector when summing.
// Equivalent to shifting the Weyl vector to its integer U(N) form; makes each
// summand p-periodic in every label entry.
cplx flat_sector_phase(const LensSpace& ls, int N, const FlatConnection& m);

// Sum of flat_sector_phase * z_exact over all flat-connection representatives
// at integer level k. orbit_weights multiplies each sector by its S_N orbit
// size N!/prod(mult!), turning the sum into one over all of (Z_p)^N.
// |z_full| agrees across homeomorphic presentations whenever q*(k+N)*p is even
// for both; odd products leave the sum representative-dependent and the
// agreement genuinely fails there.
PartitionValue z_full(const LensSpace& ls, int N, int k, bool orbit_weights = false,
                      int budget_n = 7);

}
