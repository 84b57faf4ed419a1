#pragma once

#include "kstab/linalg.hpp"

#include <vector>

namespace kstab::toric {

/// Points are 3-vectors of rationals.
using Point = Vec;

/// Supporting half-space normal . x <= offset; normal is a primitive integer vector.
struct Facet {
    Point normal;
    Rational offset;
    bool operator==(const Facet& o) const { return normal == o.normal && offset == o.offset; }
};

class LatticePolytope {
public:
    /// Convex hull of the given points. DegeneratePolytope when they do not span R^3.
    explicit LatticePolytope(const std::vector<Point>& points);
    static LatticePolytope from_integer(const std::vector<IntVec>& points);

    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    bool is_integral() const;
    bool contains(const Point& p) const;
    bool contains_strictly(const Point& p) const;
    LatticePolytope transformed(const IntMatrix& m) const;
    bool operator==(const LatticePolytope& o) const { return vertices_ == o.vertices_; }

private:
    std::vector<Point> vertices_;  // sorted lexicographically
    std::vector<Facet> facets_;    // sorted by normal
};

/// P° = {y : <x, y> >= -1 for all x in P}, the convention under which the
/// dual of a spanning-fan polytope is its toric weight polytope.
LatticePolytope polar_dual(const LatticePolytope& p);
bool is_reflexive(const LatticePolytope& p);

Rational volume(const LatticePolytope& p);
Point barycenter(const LatticePolytope& p);
/// Same quantities from the cone triangulation over a chosen interior apex.
Rational volume(const LatticePolytope& p, const Point& apex);
Point barycenter(const LatticePolytope& p, const Point& apex);
Point vertex_average(const LatticePolytope& p);

Integer anticanonical_degree(const LatticePolytope& p);

struct KpsCheck {
    bool polystable;
    Point barycenter;
};

/// Barycenter of the dual polytope vanishes (Futaki invariant criterion).
KpsCheck toric_kps_check(const LatticePolytope& p);

}  // namespace kstab::toric
