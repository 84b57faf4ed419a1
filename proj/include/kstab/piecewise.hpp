#pragma once

#include "kstab/polynomial.hpp"

#include <string>
#include <vector>

namespace kstab {

struct Piece {
    Rational lo;
    Rational hi;
    Polynomial poly;
    std::string label;
};

/// Continuous function on a closed rational interval, polynomial on each piece.
///
/// Construction rejects gaps, overlaps, empty pieces, pieces in a variable
/// other than `var`, and value jumps at shared endpoints.
class PiecewisePolynomial {
public:
    PiecewisePolynomial(std::string var, std::vector<Piece> pieces);

    static PiecewisePolynomial single(std::string var, const Rational& lo, const Rational& hi,
                                      Polynomial p, std::string label = {});

    const std::string& variable() const { return var_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    Rational lo() const { return pieces_.front().lo; }
    Rational hi() const { return pieces_.back().hi; }
    std::vector<Rational> interior_breakpoints() const;

    Rational operator()(const Rational& x) const;
    /// Exact integral over [a, b]; DomainError when [a, b] leaves the domain.
    Rational integrate(const Rational& a, const Rational& b) const;
    Rational integrate() const { return integrate(lo(), hi()); }

    /// x -> c * x reparametrization: g(x) = f(x / c) on [c*lo, c*hi], c > 0.
    PiecewisePolynomial rescaled(const Rational& c) const;

private:
    std::string var_;
    std::vector<Piece> pieces_;
};

struct C1Record {
    Rational breakpoint;
    Rational left_derivative;
    Rational right_derivative;
    bool equal;
};

/// One record per interior breakpoint comparing one-sided derivatives exactly.
std::vector<C1Record> check_c1(const PiecewisePolynomial& f);

}  // namespace kstab
