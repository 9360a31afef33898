#include "lenscs/numerics.hpp"

#include <algorithm>

namespace lenscs {

std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs, int max_iter, double tol) {
    // Strip trailing zero coefficients, then run Weierstrass simultaneous
    // iteration on the monic normalization.
    std::vector<cplx> c = coeffs;
    while (c.size() > 1 && std::abs(c.back()) == 0.0) c.pop_back();
    const int deg = static_cast<int>(c.size()) - 1;
    if (deg < 1) return {};
    const cplx lead = c.back();
    for (auto& v : c) v /= lead;

    double radius = 0.0;
    for (int k = 0; k < deg; ++k) radius = std::max(radius, std::abs(c[k]));
    radius = 1.0 + radius;

    std::vector<cplx> z(deg);
    for (int k = 0; k < deg; ++k) {
        const double ang = 6.283185307179586 * (k + 0.25) / deg;
        z[k] = radius * cplx(std::cos(ang), std::sin(ang));
    }

    auto eval = [&](const cplx& x) {
        cplx v = 1.0;
        for (int k = deg - 1; k >= 0; --k) v = v * x + c[k];
        return v;
    };

    for (int it = 0; it < max_iter; ++it) {
        double step = 0.0;
        for (int k = 0; k < deg; ++k) {
            cplx denom = 1.0;
            for (int j = 0; j < deg; ++j)
                if (j != k) denom *= (z[k] - z[j]);
            const cplx delta = eval(z[k]) / denom;
            z[k] -= delta;
            step = std::max(step, std::abs(delta));
        }
        if (step < tol) break;
    }
    return z;
}

}
