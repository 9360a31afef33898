#pragma once

#include <vector>

#include "lenscs/lens_space.hpp"
#include "lenscs/numerics.hpp"

namespace lenscs {

struct IZInput {
    std::vector<double> a;
    std::vector<double> b;
    cplx beta;
};

// Haar-normalized unitary group integral of e^{beta Tr(U diag(a) U^+ diag(b))}:
//   prod_{k=1}^{N-1} k! * det(e^{beta a_i b_j}) / (beta^{N(N-1)/2} D(a) D(b)),
// D(a) = prod_{i<j} (a_j - a_i). Requires distinct entries; beta -> 0 gives 1.
cplx iz_integral(const IZInput& inp);

// Closed evaluation of the trivial-vacuum partition integral
//   int d^N x e^{-p x.x/(g_s q)} prod_{i<j} sinh((x_i-x_j)/2q) sinh((x_i-x_j)/2)
// through the unitary-group chain. Both sinh products are antisymmetrized
// exponential sums; the Gaussian moments reduce the double permutation sum to
// a single Harish-Chandra kernel at coincident integer spectra:
//   (pi g q/p)^{N/2} 4^{-M} N! beta^M (prod_{k<N} k!) e^{E}
//     * iz_integral(1..N, 1..N, beta),
// with beta = g/2p, M = N(N-1)/2 and
//   E = g (1+q^2) (N^3-N) / (48 p q) - g N (N+1)^2 / (8 p).
// N=1 collapses to sqrt(pi g q / p); every constant is validated against
// direct quadrature of the integral itself.
cplx z_unitary_chain(const LensSpace& ls, int N, double g_s);

}  // namespace lenscs
