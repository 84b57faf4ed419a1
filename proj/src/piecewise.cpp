#include "kstab/piecewise.hpp"

#include "kstab/errors.hpp"

namespace kstab {

PiecewisePolynomial::PiecewisePolynomial(std::string var, std::vector<Piece> pieces)
    : var_(std::move(var)), pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw DomainError("piecewise polynomial without pieces");
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const Piece& p = pieces_[i];
        if (!(p.lo < p.hi)) {
            throw DomainError("empty piece [" + to_string(p.lo) + ", " + to_string(p.hi) + "]");
        }
        for (const auto& v : p.poly.variables()) {
            if (v != var_) throw DomainError("piece in variable " + v + ", expected " + var_);
        }
        if (i == 0) continue;
        const Piece& prev = pieces_[i - 1];
        if (prev.hi != p.lo) {
            throw DomainError("pieces do not abut at " + to_string(prev.hi) + " / " +
                              to_string(p.lo));
        }
        if (prev.poly(p.lo) != p.poly(p.lo)) {
            throw DomainError("discontinuity at " + to_string(p.lo) + ": " +
                              to_string(prev.poly(p.lo)) + " vs " + to_string(p.poly(p.lo)));
        }
    }
}

PiecewisePolynomial PiecewisePolynomial::single(std::string var, const Rational& lo,
                                                const Rational& hi, Polynomial p,
                                                std::string label) {
    return PiecewisePolynomial(std::move(var), {Piece{lo, hi, std::move(p), std::move(label)}});
}

std::vector<Rational> PiecewisePolynomial::interior_breakpoints() const {
    std::vector<Rational> out;
    for (std::size_t i = 1; i < pieces_.size(); ++i) out.push_back(pieces_[i].lo);
    return out;
}

Rational PiecewisePolynomial::operator()(const Rational& x) const {
    for (const auto& p : pieces_) {
        if (x >= p.lo && x <= p.hi) return p.poly(x);
    }
    throw DomainError(to_string(x) + " outside [" + to_string(lo()) + ", " + to_string(hi()) + "]");
}

Rational PiecewisePolynomial::integrate(const Rational& a, const Rational& b) const {
    if (a > b) return -integrate(b, a);
    if (a < lo() || b > hi()) {
        throw DomainError("[" + to_string(a) + ", " + to_string(b) + "] exceeds domain [" +
                          to_string(lo()) + ", " + to_string(hi()) + "]");
    }
    Rational total = 0;
    for (const auto& p : pieces_) {
        const Rational l = a > p.lo ? a : p.lo;
        const Rational h = b < p.hi ? b : p.hi;
        if (l < h) total += p.poly.integrate(l, h);
    }
    return total;
}

PiecewisePolynomial PiecewisePolynomial::rescaled(const Rational& c) const {
    if (c <= 0) throw DomainError("rescaling factor must be positive");
    std::vector<Piece> out;
    out.reserve(pieces_.size());
    const Polynomial x_over_c = Polynomial::affine(var_, 0, 1 / c);
    for (const auto& p : pieces_) {
        out.push_back(Piece{c * p.lo, c * p.hi, p.poly.substitute(var_, x_over_c), p.label});
    }
    return PiecewisePolynomial(var_, std::move(out));
}

std::vector<C1Record> check_c1(const PiecewisePolynomial& f) {
    std::vector<C1Record> out;
    const auto& ps = f.pieces();
    for (std::size_t i = 1; i < ps.size(); ++i) {
        const Rational x = ps[i].lo;
        const Rational left = ps[i - 1].poly.derivative(f.variable())(x);
        const Rational right = ps[i].poly.derivative(f.variable())(x);
        out.push_back(C1Record{x, left, right, left == right});
    }
    return out;
}

}  // namespace kstab
