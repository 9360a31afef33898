#include "lenscs/newton_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lenscs {

namespace {

std::string fmt_complex(const std::complex<double>& z) {
    std::ostringstream os;
    if (z.imag() == 0.0) {
        os << z.real();
    } else {
        os << "(" << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i)";
    }
    return os.str();
}

class Builder {
  public:
    void add(LatticePoint2 e, const std::complex<double>& c) {
        if (c != std::complex<double>{0.0, 0.0}) acc_[e].constant += c;
    }
    void add_symbol(LatticePoint2 e, const std::string& name, const std::complex<double>& mult) {
        auto& expr = acc_[e];
        for (auto& [n, m] : expr.symbols)
            if (n == name) {
                m += mult;
                return;
            }
        expr.symbols.emplace_back(name, mult);
    }
    NewtonPolynomial take() {
        NewtonPolynomial np;
        for (auto& [e, expr] : acc_) {
            std::erase_if(expr.symbols, [](const auto& s) {
                return s.second == std::complex<double>{0.0, 0.0};
            });
            if (!expr.is_zero()) np.terms.emplace_back(e, std::move(expr));
        }
        return np;
    }

  private:
    std::map<LatticePoint2, CoeffExpr> acc_;
};

void add_slot(Builder& b, LatticePoint2 e, const MirrorCoeff& c, int index) {
    if (c.has_value())
        b.add(e, *c);
    else
        b.add_symbol(e, "d_" + std::to_string(index), {1.0, 0.0});
}

}  // namespace

std::string CoeffExpr::str() const {
    std::ostringstream os;
    bool first = true;
    if (constant != std::complex<double>{0.0, 0.0} || symbols.empty()) {
        os << fmt_complex(constant);
        first = false;
    }
    for (const auto& [name, mult] : symbols) {
        if (!first) os << "+";
        if (mult != std::complex<double>{1.0, 0.0}) os << fmt_complex(mult) << "*";
        os << name;
        first = false;
    }
    return os.str();
}

std::vector<LatticePoint2> NewtonPolynomial::support() const {
    std::vector<LatticePoint2> s;
    s.reserve(terms.size());
    for (const auto& [e, c] : terms) s.push_back(e);
    return s;
}

std::string NewtonPolynomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (e.x != 0 || e.y != 0) {
            os << "*e^{";
            if (e.x != 0) os << (e.x == 1 ? "" : std::to_string(e.x)) << "u";
            if (e.y != 0) {
                if (e.x != 0) os << "+";
                os << (e.y == 1 ? "" : std::to_string(e.y)) << "v";
            }
            os << "}";
        }
    }
    return os.str();
}

NewtonPolynomial newton_polynomial(const LensSpace& ls, const std::vector<MirrorCoeff>& coeffs) {
    const std::int64_t p = ls.p;
    const std::int64_t q = ls.q;
    if (coeffs.size() != static_cast<std::size_t>(p))
        throw std::invalid_argument("need coefficients d_1..d_p");

    Builder b;
    b.add({p, q + 1}, {1.0, 0.0});
    b.add({p, q}, {-1.0, 0.0});
    b.add({0, 1}, {-1.0, 0.0});
    b.add({0, 0}, {1.0, 0.0});
    add_slot(b, {0, 0}, coeffs[static_cast<std::size_t>(p - 1)], static_cast<int>(p));
    for (std::int64_t j = 1; j <= p - 1; ++j) {
        LatticePoint2 e{j, q - ((p - j) * q) / p};
        add_slot(b, e, coeffs[static_cast<std::size_t>(j - 1)], static_cast<int>(j));
    }
    return b.take();
}

NewtonPolynomial q1_specialization(int p, double t, const std::vector<MirrorCoeff>& d) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    if (d.size() != static_cast<std::size_t>(p - 1))
        throw std::invalid_argument("need coefficients d_1..d_{p-1}");

    Builder b;
    b.add({p, 2}, {1.0, 0.0});
    b.add({p, 1}, {-1.0, 0.0});
    b.add({0, 1}, {-1.0, 0.0});
    b.add({0, 0}, {std::exp(t), 0.0});
    for (int n = 1; n <= p - 1; ++n)
        add_slot(b, {n, 1}, d[static_cast<std::size_t>(n - 1)], n);
    return b.take();
}

CurveInvariants curve_invariants(const NewtonPolynomial& np) {
    auto pts = np.support();
    auto hull = convex_hull(pts);
    if (hull.size() < 3) throw std::invalid_argument("degenerate support");
    std::int64_t xlo = pts[0].x, xhi = xlo, ylo = pts[0].y, yhi = ylo;
    for (const auto& v : pts) {
        xlo = std::min(xlo, v.x);
        xhi = std::max(xhi, v.x);
        ylo = std::min(ylo, v.y);
        yhi = std::max(yhi, v.y);
    }
    CurveInvariants inv{0, 0, lattice_width(pts) <= 2};
    for (std::int64_t x = xlo; x <= xhi; ++x)
        for (std::int64_t y = ylo; y <= yhi; ++y) {
            switch (classify_against_hull(hull, {x, y})) {
                case HullSide::interior: inv.genus++; break;
                case HullSide::boundary: inv.punctures++; break;
                case HullSide::outside: break;
            }
        }
    return inv;
}

std::optional<AffineUnimodularMap> support_map(const NewtonPolynomial& np, const LatticeFan& fan) {
    return find_lattice_isomorphism(np.support(), fan.points);
}

}
