#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace kstab {

using Integer = mpz_class;
using Rational = mpq_class;
using Vec = std::vector<Rational>;
using IntVec = std::vector<Integer>;

/// n/d in lowest terms. Two-argument mpq_class construction does not
/// canonicalize, so every fraction literal goes through here.
inline Rational frac(const Integer& n, const Integer& d) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

/// Canonical "p/q" form in lowest terms; integers print without a denominator.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q" (whitespace tolerated). Throws ParseError.
Rational parse_rational(std::string_view text);

Integer floor(const Rational& q);
/// Representative of q modulo m in [0, m), for m > 0.
Rational mod(const Rational& q, const Rational& m);

int sign(const Rational& q);
int sign(const Integer& z);

double to_double(const Rational& q);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& c, const Vec& a);
Vec zero_vec(std::size_t n);
bool is_zero(const Vec& v);
Vec to_vec(const IntVec& v);

std::string to_string(const Vec& v);

}  // namespace kstab
