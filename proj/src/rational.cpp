#include "kstab/rational.hpp"

#include "kstab/errors.hpp"

#include <cctype>

namespace kstab {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string cleaned;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
    }
    if (cleaned.empty()) throw ParseError("empty rational");
    if (cleaned.front() == '+') cleaned.erase(cleaned.begin());
    const auto slash = cleaned.find('/');
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        }
        return true;
    };
    const std::string num = cleaned.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : cleaned.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-') {
        throw ParseError("not a rational: '" + std::string(text) + "'");
    }
    Integer d(den);
    if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational mod(const Rational& q, const Rational& m) {
    Rational ratio = q / m;
    return q - m * Rational(floor(ratio));
}

int sign(const Rational& q) { return sgn(q); }
int sign(const Integer& z) { return sgn(z); }

double to_double(const Rational& q) { return q.get_d(); }

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sum");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector difference");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec operator*(const Rational& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

bool is_zero(const Vec& v) {
    for (const auto& x : v) {
        if (x != 0) return false;
    }
    return true;
}

Vec to_vec(const IntVec& v) {
    Vec r;
    r.reserve(v.size());
    for (const auto& z : v) r.emplace_back(z);
    return r;
}

std::string to_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

}  // namespace kstab
