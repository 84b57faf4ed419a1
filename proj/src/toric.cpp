#include "kstab/toric.hpp"

#include "kstab/errors.hpp"

#include <algorithm>

namespace kstab::toric {

namespace {

Point sub(const Point& a, const Point& b) { return a - b; }

Point cross(const Point& a, const Point& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational dot(const Point& a, const Point& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Rational det3(const Point& a, const Point& b, const Point& c) { return dot(a, cross(b, c)); }

Point primitive(const Point& v) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    Integer g = 0;
    IntVec n(3);
    for (int i = 0; i < 3; ++i) {
        n[i] = v[i].get_num() * (l / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n[i].get_mpz_t());
    }
    Point out(3);
    for (int i = 0; i < 3; ++i) out[i] = Rational(n[i] / g);
    return out;
}

bool lex_less(const Point& a, const Point& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void require_three(const Point& p) {
    if (p.size() != 3) throw DimensionMismatch("expected a 3-vector, got " + std::to_string(p.size()));
}

bool spans_space(const std::vector<Point>& normals) {
    for (std::size_t i = 0; i < normals.size(); ++i)
        for (std::size_t j = i + 1; j < normals.size(); ++j)
            for (std::size_t k = j + 1; k < normals.size(); ++k)
                if (det3(normals[i], normals[j], normals[k]) != 0) return true;
    return false;
}

}  // namespace

LatticePolytope::LatticePolytope(const std::vector<Point>& points) {
    std::vector<Point> pts = points;
    for (const auto& p : pts) require_three(p);
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Point raw = cross(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
                if (is_zero(raw)) continue;
                Point normal = primitive(raw);
                const Rational c = dot(normal, pts[i]);
                bool below = false, above = false;
                for (const auto& p : pts) {
                    const int s = sign(dot(normal, p) - c);
                    below = below || s < 0;
                    above = above || s > 0;
                }
                if (below && above) continue;
                if (!below && !above) throw DegeneratePolytope("points are coplanar");
                Facet f = below ? Facet{normal, c} : Facet{Rational(-1) * normal, -c};
                if (std::find(facets_.begin(), facets_.end(), f) == facets_.end()) facets_.push_back(f);
            }
    if (facets_.size() < 4) throw DegeneratePolytope("points do not span a 3-dimensional polytope");
    std::sort(facets_.begin(), facets_.end(),
              [](const Facet& a, const Facet& b) { return lex_less(a.normal, b.normal); });
    for (const auto& p : pts) {
        std::vector<Point> normals;
        for (const auto& f : facets_)
            if (dot(f.normal, p) == f.offset) normals.push_back(f.normal);
        if (spans_space(normals)) vertices_.push_back(p);
    }
}

LatticePolytope LatticePolytope::from_integer(const std::vector<IntVec>& points) {
    std::vector<Point> pts;
    pts.reserve(points.size());
    for (const auto& p : points) pts.push_back(to_vec(p));
    return LatticePolytope(pts);
}

bool LatticePolytope::is_integral() const {
    for (const auto& v : vertices_)
        for (const auto& x : v)
            if (x.get_den() != 1) return false;
    return true;
}

bool LatticePolytope::contains(const Point& p) const {
    require_three(p);
    for (const auto& f : facets_)
        if (dot(f.normal, p) > f.offset) return false;
    return true;
}

bool LatticePolytope::contains_strictly(const Point& p) const {
    require_three(p);
    for (const auto& f : facets_)
        if (dot(f.normal, p) >= f.offset) return false;
    return true;
}

LatticePolytope LatticePolytope::transformed(const IntMatrix& m) const {
    if (m.rows() != 3 || m.cols() != 3) throw DimensionMismatch("expected a 3x3 matrix");
    const Integer d = determinant(m);
    if (d != 1 && d != -1) throw DomainError("transformation is not unimodular");
    const Matrix q = to_rational(m);
    std::vector<Point> pts;
    for (const auto& v : vertices_) pts.push_back(q * v);
    return LatticePolytope(pts);
}

LatticePolytope polar_dual(const LatticePolytope& p) {
    std::vector<Point> pts;
    for (const auto& f : p.facets()) {
        if (f.offset <= 0) throw OriginNotInterior("facet " + to_string(f.normal) + " <= " + to_string(f.offset));
        pts.push_back(Rational(-1) / f.offset * f.normal);
    }
    return LatticePolytope(pts);
}

bool is_reflexive(const LatticePolytope& p) { return p.is_integral() && polar_dual(p).is_integral(); }

Point vertex_average(const LatticePolytope& p) {
    Point c = zero_vec(3);
    for (const auto& v : p.vertices()) c = c + v;
    return Rational(1, p.vertices().size()) * c;
}

namespace {

// Cones over the facets, each facet fanned from its vertex average along its edges.
template <typename Fn>
void for_each_tetrahedron(const LatticePolytope& p, const Point& apex, Fn&& fn) {
    require_three(apex);
    if (!p.contains(apex)) throw DomainError("apex " + to_string(apex) + " outside the polytope");
    const auto& fs = p.facets();
    for (std::size_t fi = 0; fi < fs.size(); ++fi) {
        std::vector<Point> on;
        for (const auto& v : p.vertices())
            if (dot(fs[fi].normal, v) == fs[fi].offset) on.push_back(v);
        Point c = zero_vec(3);
        for (const auto& v : on) c = c + v;
        c = Rational(1, on.size()) * c;
        for (std::size_t a = 0; a < on.size(); ++a)
            for (std::size_t b = a + 1; b < on.size(); ++b) {
                bool edge = false;
                for (std::size_t gi = 0; gi < fs.size() && !edge; ++gi)
                    edge = gi != fi && dot(fs[gi].normal, on[a]) == fs[gi].offset &&
                           dot(fs[gi].normal, on[b]) == fs[gi].offset;
                if (edge) fn(apex, c, on[a], on[b]);
            }
    }
}

}  // namespace

Rational volume(const LatticePolytope& p, const Point& apex) {
    Rational total = 0;
    for_each_tetrahedron(p, apex, [&](const Point& a, const Point& b, const Point& c, const Point& d) {
        total += abs(det3(sub(b, a), sub(c, a), sub(d, a)));
    });
    return total / 6;
}

Point barycenter(const LatticePolytope& p, const Point& apex) {
    Rational total = 0;
    Point moment = zero_vec(3);
    for_each_tetrahedron(p, apex, [&](const Point& a, const Point& b, const Point& c, const Point& d) {
        const Rational w = abs(det3(sub(b, a), sub(c, a), sub(d, a)));
        total += w;
        moment = moment + w * (a + b + c + d);
    });
    return Rational(1) / (4 * total) * moment;
}

Rational volume(const LatticePolytope& p) { return volume(p, vertex_average(p)); }
Point barycenter(const LatticePolytope& p) { return barycenter(p, vertex_average(p)); }

Integer anticanonical_degree(const LatticePolytope& p) {
    if (!is_reflexive(p)) throw NotReflexive("polytope is not reflexive");
    const Rational d = 6 * volume(polar_dual(p));
    return d.get_num();
}

KpsCheck toric_kps_check(const LatticePolytope& p) {
    if (!is_reflexive(p)) throw NotReflexive("polytope is not reflexive");
    const Point b = barycenter(polar_dual(p));
    return KpsCheck{is_zero(b), b};
}

}  // namespace kstab::toric
