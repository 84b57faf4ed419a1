#pragma once

#include "kstab/linalg.hpp"
#include "kstab/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kstab::intersect {

struct NamedClass {
    std::string label;
    Vec value;
};

/// Positive-part class base + t * slope on [lo, hi].
struct ChamberSpec {
    Rational lo;
    Rational hi;
    Vec base;
    Vec slope;
    /// P^3 only bounds vol from below here (N is effective but P need not be
    /// the full positive part).
    bool lower_bound = false;

    Vec at(const Rational& t) const { return base + t * slope; }
};

/// Restricted positive parts on a surface used for a refined flag integral.
struct FlagSpec {
    std::string label;          // divisor the surface comes from
    std::string surface;        // surface preset name
    std::vector<ChamberSpec> chambers;  // vectors in the surface basis
};

/// Free basis of divisor classes with a symmetric trilinear intersection form.
///
/// Curves are recorded by their pairings with the basis divisors, so that a
/// class D = sum d_i B_i has D.C = sum d_i C_i.
struct ThreefoldModel {
    std::string name;
    std::vector<std::string> basis;
    std::vector<Rational> tensor;  // rank^3, symmetric
    Vec anticanonical;
    std::vector<NamedClass> curves;
    std::vector<NamedClass> divisors;
    std::vector<std::string> effective;  // divisor labels usable in negative parts
    std::map<std::string, std::vector<ChamberSpec>> chambers;  // by divisor label
    std::vector<FlagSpec> flags;

    std::size_t rank() const { return basis.size(); }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k) const;
    /// Writes all index permutations.
    void set(std::size_t i, std::size_t j, std::size_t k, const Rational& v);
    /// Basis label or declared divisor label.
    Vec class_of(const std::string& label) const;
    std::optional<NamedClass> divisor(const std::string& label) const;
    Rational degree() const;
};

ThreefoldModel empty_threefold(std::string name, std::vector<std::string> basis);

/// Symmetry, vector sizes and label references. Throws DomainError.
void validate(const ThreefoldModel& m);

Rational triple_product(const ThreefoldModel& m, const Vec& a, const Vec& b, const Vec& c);
/// (base + var * slope)^3 as a polynomial in var.
Polynomial cube_polynomial(const ThreefoldModel& m, const Vec& base, const Vec& slope,
                           const std::string& var);
/// D.C for a divisor class and a curve pairing vector.
Rational pair_curve(const Vec& divisor, const Vec& curve);

struct SurfaceModel {
    std::string name;
    std::vector<std::string> basis;
    Matrix gram;
    Vec canonical;
    std::vector<NamedClass> negative_curves;
    std::vector<NamedClass> eff_cone;       // empty: negative curves are the generators
    std::vector<NamedClass> nef_witnesses;  // D.N < 0 rules out pseudo-effectivity

    std::size_t rank() const { return basis.size(); }
    Rational pair(const Vec& a, const Vec& b) const;
    Rational square(const Vec& a) const { return pair(a, a); }
    const std::vector<NamedClass>& effective_generators() const;
};

void validate(const SurfaceModel& s);

/// Gram(i, j) = b_i . b_j . S.
SurfaceModel restrict_to_surface(const ThreefoldModel& m, const Vec& surface,
                                 const std::vector<NamedClass>& restricted_basis);

/// "9/4 L - e1 - 2*e2 + (1/2) e3" over the given labels. Throws ParseError.
Vec parse_class(const std::string& text, const std::vector<std::string>& labels);
/// Inverse of parse_class in canonical form ("0" for the zero class).
std::string format_class(const Vec& v, const std::vector<std::string>& labels);

ThreefoldModel blowup_p3_curve(int degree, int genus);
/// blowup_p3_curve(5, 0) with the quadric Qtilde = 2H - E, its rulings, and
/// the chamber data for E, Qtilde and a hyperplane section S.
ThreefoldModel bl_p3_quintic();
ThreefoldModel blowup_node(long volume);
ThreefoldModel blowup_v4_conic();
ThreefoldModel sing_line_model(int genus, int k);

SurfaceModel dp4_surface();
SurfaceModel quadric_surface();

}  // namespace kstab::intersect
