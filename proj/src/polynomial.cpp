#include "kstab/polynomial.hpp"

#include "kstab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace kstab {

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) terms_[{0, 0}] = c;
}

Polynomial Polynomial::variable(const std::string& name) {
    Polynomial p;
    p.vars_ = {name};
    p.terms_[{1, 0}] = 1;
    return p;
}

Polynomial Polynomial::affine(const std::string& name, const Rational& c0, const Rational& c1) {
    return Polynomial(c0) + Polynomial(c1) * variable(name);
}

bool Polynomial::has_variable(const std::string& name) const { return index_of(name) >= 0; }

int Polynomial::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return static_cast<int>(i);
    }
    return -1;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1]);
    return d;
}

int Polynomial::degree_in(const std::string& name) const {
    const int i = index_of(name);
    if (terms_.empty()) return -1;
    if (i < 0) return 0;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

Rational Polynomial::coefficient(const std::string& name, int power) const {
    if (vars_.size() > 1 || (vars_.size() == 1 && vars_[0] != name)) {
        throw DomainError("coefficient(" + name + ") on polynomial in other variables");
    }
    auto it = terms_.find({power, 0});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const {
    auto it = terms_.find({0, 0});
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it = it->second == 0 ? terms_.erase(it) : std::next(it);
    }
    std::array<bool, 2> used{false, false};
    for (const auto& [e, c] : terms_) {
        used[0] = used[0] || e[0] > 0;
        used[1] = used[1] || e[1] > 0;
    }
    std::vector<std::string> vars;
    std::vector<int> keep;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (used[i]) {
            vars.push_back(vars_[i]);
            keep.push_back(static_cast<int>(i));
        }
    }
    if (vars.size() == vars_.size()) return;
    std::map<Exponent, Rational> terms;
    for (const auto& [e, c] : terms_) {
        Exponent ne{0, 0};
        for (std::size_t j = 0; j < keep.size(); ++j) ne[j] = e[keep[j]];
        terms[ne] += c;
    }
    vars_ = std::move(vars);
    terms_ = std::move(terms);
}

std::vector<std::string> Polynomial::merged_variables(const Polynomial& a, const Polynomial& b) {
    std::vector<std::string> vars = a.vars_;
    for (const auto& v : b.vars_) {
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    std::sort(vars.begin(), vars.end());
    if (vars.size() > 2) throw DomainError("polynomials support at most two variables");
    return vars;
}

Polynomial Polynomial::remapped(const std::vector<std::string>& vars) const {
    if (vars == vars_) return *this;
    std::array<int, 2> target{0, 0};
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        target[i] = static_cast<int>(it - vars.begin());
    }
    Polynomial r;
    r.vars_ = vars;
    for (const auto& [e, c] : terms_) {
        Exponent ne{0, 0};
        for (std::size_t i = 0; i < vars_.size(); ++i) ne[target[i]] = e[i];
        r.terms_[ne] = c;
    }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    const auto vars = merged_variables(*this, o);
    *this = remapped(vars);
    const Polynomial rhs = o.remapped(vars);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    const auto vars = merged_variables(*this, o);
    const Polynomial lhs = remapped(vars);
    const Polynomial rhs = o.remapped(vars);
    Polynomial r;
    r.vars_ = vars;
    for (const auto& [e1, c1] : lhs.terms_) {
        for (const auto& [e2, c2] : rhs.terms_) r.add_term({e1[0] + e2[0], e1[1] + e2[1]}, c1 * c2);
    }
    r.normalize();
    *this = std::move(r);
    return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(Rational(1));
    Polynomial base = *this;
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

Rational Polynomial::operator()(const Rational& x) const {
    if (vars_.size() > 1) throw DomainError("univariate evaluation of bivariate polynomial");
    Rational acc = 0;
    // Horner over the dense coefficient list.
    const int d = degree();
    for (int k = d; k >= 0; --k) {
        auto it = terms_.find({k, 0});
        acc = acc * x + (it == terms_.end() ? Rational(0) : it->second);
    }
    return acc;
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& at) const {
    std::array<Rational, 2> x;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = at.find(vars_[i]);
        if (it == at.end()) throw DomainError("no value bound for variable " + vars_[i]);
        x[i] = it->second;
    }
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            for (int k = 0; k < e[i]; ++k) term *= x[i];
        }
        acc += term;
    }
    return acc;
}

double Polynomial::evaluate_double(const std::map<std::string, double>& at) const {
    std::array<double, 2> x{0.0, 0.0};
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = at.find(vars_[i]);
        if (it == at.end()) throw DomainError("no value bound for variable " + vars_[i]);
        x[i] = it->second;
    }
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
        acc += c.get_d() * std::pow(x[0], e[0]) * std::pow(x[1], e[1]);
    }
    return acc;
}

Polynomial Polynomial::substitute(const std::string& name, const Polynomial& replacement) const {
    const int i = index_of(name);
    if (i < 0) return *this;
    std::vector<Polynomial> powers{Polynomial(Rational(1))};
    Polynomial result;
    for (const auto& [e, c] : terms_) {
        while (static_cast<int>(powers.size()) <= e[i]) powers.push_back(powers.back() * replacement);
        Polynomial monomial(c);
        for (std::size_t j = 0; j < vars_.size(); ++j) {
            if (static_cast<int>(j) == i) continue;
            monomial *= variable(vars_[j]).pow(static_cast<unsigned>(e[j]));
        }
        result += monomial * powers[e[i]];
    }
    return result;
}

Polynomial Polynomial::derivative(const std::string& name) const {
    const int i = index_of(name);
    if (i < 0) return Polynomial();
    Polynomial r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponent ne = e;
        ne[i] -= 1;
        r.add_term(ne, c * e[i]);
    }
    r.normalize();
    return r;
}

Polynomial Polynomial::antiderivative(const std::string& name) const {
    std::vector<std::string> vars = vars_;
    if (index_of(name) < 0) {
        vars.push_back(name);
        std::sort(vars.begin(), vars.end());
        if (vars.size() > 2) throw DomainError("polynomials support at most two variables");
    }
    const Polynomial src = remapped(vars);
    const int i = src.index_of(name);
    Polynomial r;
    r.vars_ = vars;
    for (const auto& [e, c] : src.terms_) {
        Exponent ne = e;
        ne[i] += 1;
        r.add_term(ne, c / ne[i]);
    }
    r.normalize();
    return r;
}

Polynomial Polynomial::integrate(const std::string& name, const Polynomial& lo,
                                 const Polynomial& hi) const {
    const Polynomial f = antiderivative(name);
    return f.substitute(name, hi) - f.substitute(name, lo);
}

Rational Polynomial::integrate(const Rational& a, const Rational& b) const {
    if (vars_.size() > 1) throw DomainError("univariate integration of bivariate polynomial");
    const std::string name = vars_.empty() ? std::string("x") : vars_[0];
    const Polynomial f = antiderivative(name);
    return f(b) - f(a);
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponent, Rational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        const int da = a.first[0] + a.first[1];
        const int db = b.first[0] + b.first[1];
        if (da != db) return da < db;
        return a.first[0] > b.first[0];
    });
    std::string out;
    bool first = true;
    for (const auto& [e, c] : ordered) {
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string monomial;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (!monomial.empty()) monomial += "*";
            monomial += vars_[i];
            if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
        }
        if (monomial.empty()) {
            out += kstab::to_string(mag);
        } else if (mag == 1) {
            out += monomial;
        } else {
            out += kstab::to_string(mag) + "*" + monomial;
        }
    }
    return out;
}

std::string to_string(const Polynomial& p) { return p.to_string(); }

namespace {

bool rational_sqrt(const Rational& q, Rational& root) {
    if (q < 0) return false;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
        return false;
    }
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    root = Rational(n, d);
    root.canonicalize();
    return true;
}

// sign((-b + s*sqrt(disc)) / (2a) - q) for an irrational square root.
int compare_quadratic_root(const Rational& a, const Rational& b, const Rational& disc, int s,
                           const Rational& q) {
    const Rational y = 2 * a * q + b;
    int inner;
    if (s > 0) {
        inner = y < 0 ? 1 : sgn(disc - y * y);
    } else {
        inner = y > 0 ? -1 : -sgn(disc - y * y);
    }
    return inner * sgn(a);
}

}  // namespace

std::vector<Rational> rational_roots_in_interval(const Polynomial& p, const Rational& lo,
                                                 const Rational& hi) {
    if (p.is_zero()) throw DomainError("root finding on the zero polynomial");
    if (p.variables().size() > 1) throw DomainError("root finding needs a univariate polynomial");
    const int d = p.degree();
    if (d > 2) throw DomainError("root finding limited to degree <= 2");
    const std::string v = p.variables().empty() ? std::string("x") : p.variables()[0];
    std::vector<Rational> roots;
    auto keep = [&](const Rational& r) {
        if (r >= lo && r <= hi) roots.push_back(r);
    };
    if (d == 1) {
        keep(-p.coefficient(v, 0) / p.coefficient(v, 1));
    } else if (d == 2) {
        const Rational a = p.coefficient(v, 2);
        const Rational b = p.coefficient(v, 1);
        const Rational c = p.coefficient(v, 0);
        const Rational disc = b * b - 4 * a * c;
        Rational root;
        if (disc < 0) {
            // no real roots
        } else if (rational_sqrt(disc, root)) {
            keep((-b - root) / (2 * a));
            if (root != 0) keep((-b + root) / (2 * a));
        } else {
            for (int s : {-1, 1}) {
                if (compare_quadratic_root(a, b, disc, s, lo) >= 0 &&
                    compare_quadratic_root(a, b, disc, s, hi) <= 0) {
                    throw IrrationalWall("polynomial " + p.to_string() +
                                         " has an irrational root in [" + to_string(lo) + ", " +
                                         to_string(hi) + "]");
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace kstab
