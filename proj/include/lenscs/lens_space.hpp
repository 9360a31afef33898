#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

namespace lenscs {

// Quotient label (p, q) with 1 <= q < p and gcd(p, q) = 1.
struct LensSpace {
    int p = 0;
    int q = 0;

    LensSpace(int p_, int q_) : p(p_), q(q_) {
        if (p < 2) throw std::invalid_argument("LensSpace: p must be >= 2, got " + std::to_string(p));
        if (q < 1 || q >= p)
            throw std::invalid_argument("LensSpace: q must satisfy 1 <= q < p, got q=" + std::to_string(q) +
                                        " p=" + std::to_string(p));
        if (std::gcd(p, q) != 1)
            throw std::invalid_argument("LensSpace: p and q must be coprime, got p=" + std::to_string(p) +
                                        " q=" + std::to_string(q));
    }

    bool operator==(const LensSpace& o) const { return p == o.p && q == o.q; }
};

// True when (p,q) and (p,q') label the same 3-manifold: q' = +-q or q*q' = +-1 (mod p).
inline bool homeomorphic(const LensSpace& a, const LensSpace& b) {
    if (a.p != b.p) return false;
    const int p = a.p;
    auto modp = [p](long long v) { return static_cast<int>(((v % p) + p) % p); };
    if (modp(a.q - b.q) == 0 || modp(a.q + b.q) == 0) return true;
    const long long prod = static_cast<long long>(a.q) * b.q;
    return modp(prod - 1) == 0 || modp(prod + 1) == 0;
}

}
