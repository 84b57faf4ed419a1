#pragma once

#include "kstab/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace kstab {

/// Polynomial with exact rational coefficients in at most two named variables.
///
/// Variables are kept sorted by name and only variables that actually occur
/// are retained, so structurally equal polynomials compare equal and print to
/// the same canonical string ("22 - 6*t^2 - 4*t^3").
class Polynomial {
public:
    using Exponent = std::array<int, 2>;

    Polynomial() = default;
    Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
    Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT

    static Polynomial variable(const std::string& name);
    /// c0 + c1 * name
    static Polynomial affine(const std::string& name, const Rational& c0, const Rational& c1);

    const std::vector<std::string>& variables() const { return vars_; }
    bool has_variable(const std::string& name) const;
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    int degree() const;
    int degree_in(const std::string& name) const;

    /// Coefficient of name^power, for polynomials in at most that one variable.
    Rational coefficient(const std::string& name, int power) const;
    Rational constant_term() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Value of a polynomial in at most one variable.
    Rational operator()(const Rational& x) const;
    /// Value with every occurring variable bound.
    Rational evaluate(const std::map<std::string, Rational>& at) const;
    double evaluate_double(const std::map<std::string, double>& at) const;

    /// Replace `name` by `replacement` (which may involve the other variable).
    Polynomial substitute(const std::string& name, const Polynomial& replacement) const;
    Polynomial derivative(const std::string& name) const;
    /// Antiderivative in `name` with zero constant of integration.
    Polynomial antiderivative(const std::string& name) const;
    /// Definite integral in `name` between polynomial bounds in the other variable.
    Polynomial integrate(const std::string& name, const Polynomial& lo, const Polynomial& hi) const;
    /// Definite integral of a polynomial in at most one variable.
    Rational integrate(const Rational& a, const Rational& b) const;

    std::string to_string() const;

private:
    std::vector<std::string> vars_;
    std::map<Exponent, Rational> terms_;

    int index_of(const std::string& name) const;
    void add_term(const Exponent& e, const Rational& c);
    void normalize();
    Polynomial remapped(const std::vector<std::string>& vars) const;
    static std::vector<std::string> merged_variables(const Polynomial& a, const Polynomial& b);
};

std::string to_string(const Polynomial& p);

/// Sorted rational roots of a polynomial of degree <= 2 (one variable) lying in
/// [lo, hi]. Throws IrrationalWall when an irrational real root falls in the
/// interval, DomainError for the zero polynomial or degree > 2.
std::vector<Rational> rational_roots_in_interval(const Polynomial& p, const Rational& lo,
                                                 const Rational& hi);

}  // namespace kstab
