#include "kstab/lattice.hpp"

#include "kstab/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kstab::lattice {

GramLattice::GramLattice(IntMatrix gram) : gram_(std::move(gram)) {
    if (gram_.rows() == 0) throw DomainError("lattice of rank zero");
    if (!gram_.is_symmetric()) throw DomainError("Gram matrix is not symmetric");
}

GramLattice::GramLattice(std::initializer_list<std::initializer_list<long>> rows)
    : GramLattice([&] {
          IntMatrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
          std::size_t i = 0;
          for (const auto& r : rows) {
              if (r.size() != m.cols()) throw DomainError("ragged Gram literal");
              std::size_t j = 0;
              for (long v : r) m(i, j++) = v;
              ++i;
          }
          return m;
      }()) {}

bool GramLattice::is_even() const {
    for (std::size_t i = 0; i < rank(); ++i) {
        if (mpz_odd_p(gram_(i, i).get_mpz_t())) return false;
    }
    return true;
}

Integer determinant(const GramLattice& l) { return kstab::determinant(l.gram()); }

Inertia signature(const GramLattice& l) { return inertia(l.rational_gram()); }

Integer pair(const GramLattice& l, const IntVec& v, const IntVec& w) {
    if (v.size() != l.rank() || w.size() != l.rank()) {
        throw DimensionMismatch("vector size does not match lattice rank " +
                                std::to_string(l.rank()));
    }
    Integer acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) acc += v[i] * l.gram()(i, j) * w[j];
    return acc;
}

Integer evaluate(const GramLattice& l, const IntVec& v) { return pair(l, v, v); }

Vec reduce_mod_lattice(const Vec& x) {
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = mod(x[i], Rational(1));
    return r;
}

Integer DiscriminantGroup::order() const {
    Integer n = 1;
    for (const auto& d : factors) n *= d;
    return n;
}

Vec DiscriminantGroup::element(const std::vector<long>& coefficients) const {
    if (coefficients.size() != generators.size()) {
        throw DimensionMismatch("expected " + std::to_string(generators.size()) +
                                " generator coefficients");
    }
    Vec x = zero_vec(gram.rows());
    for (std::size_t i = 0; i < generators.size(); ++i) {
        x = x + Rational(coefficients[i]) * generators[i];
    }
    return reduce_mod_lattice(x);
}

std::vector<long> DiscriminantGroup::coefficients_of(std::uint64_t index) const {
    std::vector<long> c(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto d = factors[i].get_ui();
        c[i] = static_cast<long>(index % d);
        index /= d;
    }
    return c;
}

DiscriminantGroup discriminant_group(const GramLattice& l) {
    if (determinant(l) == 0) throw DegenerateLattice("discriminant group of a degenerate lattice");
    const SmithForm snf = smith_normal_form(l.gram());
    const Matrix u_inv = inverse(to_rational(snf.u));
    const Matrix g_inv = inverse(l.rational_gram());
    DiscriminantGroup out;
    out.gram = l.rational_gram();
    for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
        if (snf.diagonal[i] == 1) continue;
        Vec y(l.rank());
        for (std::size_t r = 0; r < l.rank(); ++r) y[r] = u_inv(r, i);
        out.factors.push_back(snf.diagonal[i]);
        out.generators.push_back(reduce_mod_lattice(g_inv * y));
    }
    return out;
}

namespace {

void require_even(const GramLattice& l) {
    if (!l.is_even()) throw OddLattice("discriminant quadratic form needs an even lattice");
}

void require_enumerable(const DiscriminantGroup& g, std::uint64_t bound) {
    if (g.order() > Integer(std::to_string(bound))) {
        throw GroupTooLarge("discriminant group of order " + g.order().get_str() +
                            " exceeds enumeration bound " + std::to_string(bound));
    }
}

// Finite quadratic form of A_L in generator coordinates, scaled by M = |det|:
// M*q(c) = sum_i c_i^2 qd_i + sum_{i<j} c_i c_j bd_ij  (mod 2M), and
// M*b(c,c') = sum_ij c_i c'_j bm_ij (mod M).
struct ScaledForm {
    std::int64_t m = 1;
    std::vector<std::int64_t> factors;
    std::vector<std::int64_t> qd;
    std::vector<std::vector<std::int64_t>> bd;
    std::vector<std::vector<std::int64_t>> bm;

    explicit ScaledForm(const DiscriminantGroup& g) {
        m = 1;
        for (const auto& d : g.factors) m *= d.get_si();
        const std::size_t k = g.factors.size();
        factors.resize(k);
        qd.assign(k, 0);
        bd.assign(k, std::vector<std::int64_t>(k, 0));
        bm.assign(k, std::vector<std::int64_t>(k, 0));
        auto as_int = [](const Rational& r) {
            if (r.get_den() != 1) throw DomainError("scaled discriminant form is not integral");
            return r.get_num().get_si();
        };
        for (std::size_t i = 0; i < k; ++i) {
            factors[i] = g.factors[i].get_si();
            for (std::size_t j = 0; j < k; ++j) {
                const Rational b = bilinear(g.gram, g.generators[i], g.generators[j]);
                if (i == j) qd[i] = as_int(mod(Rational(m) * b, Rational(2 * m)));
                if (i < j) bd[i][j] = as_int(mod(Rational(2 * m) * b, Rational(2 * m)));
                bm[i][j] = as_int(mod(Rational(m) * b, Rational(m)));
            }
        }
    }

    std::vector<std::int64_t> decode(std::uint64_t index) const {
        std::vector<std::int64_t> c(factors.size());
        for (std::size_t i = 0; i < factors.size(); ++i) {
            c[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(factors[i]));
            index /= static_cast<std::uint64_t>(factors[i]);
        }
        return c;
    }

    std::uint64_t encode(const std::vector<std::int64_t>& c) const {
        std::uint64_t index = 0;
        for (std::size_t i = factors.size(); i-- > 0;) {
            index = index * static_cast<std::uint64_t>(factors[i]) +
                    static_cast<std::uint64_t>(c[i]);
        }
        return index;
    }

    bool isotropic(const std::vector<std::int64_t>& c) const {
        const __int128 mod2m = 2 * static_cast<__int128>(m);
        __int128 acc = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            acc = (acc + static_cast<__int128>(c[i]) * c[i] % mod2m * qd[i]) % mod2m;
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                acc = (acc + static_cast<__int128>(c[i]) * c[j] % mod2m * bd[i][j]) % mod2m;
            }
        }
        return acc % mod2m == 0;
    }

    bool orthogonal(const std::vector<std::int64_t>& c, const std::vector<std::int64_t>& d) const {
        __int128 acc = 0;
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < d.size(); ++j)
                acc = (acc + static_cast<__int128>(c[i]) * d[j] % m * bm[i][j]) % m;
        return acc % m == 0;
    }

    std::uint64_t add(std::uint64_t x, std::uint64_t y) const {
        auto a = decode(x);
        const auto b = decode(y);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % factors[i];
        return encode(a);
    }
};

std::vector<std::uint64_t> isotropic_indices(const ScaledForm& form, std::uint64_t order) {
    std::vector<std::uint64_t> hits;
#pragma omp parallel
    {
        std::vector<std::uint64_t> local;
#pragma omp for schedule(static) nowait
        for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(order); ++idx) {
            const auto c = form.decode(static_cast<std::uint64_t>(idx));
            if (form.isotropic(c)) local.push_back(static_cast<std::uint64_t>(idx));
        }
#pragma omp critical
        hits.insert(hits.end(), local.begin(), local.end());
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

Vec element_of(const DiscriminantGroup& g, const ScaledForm& form, std::uint64_t index) {
    const auto c = form.decode(index);
    return g.element(std::vector<long>(c.begin(), c.end()));
}

void sort_canonical(std::vector<Vec>& xs) {
    std::sort(xs.begin(), xs.end());
}

}  // namespace

Rational discriminant_quadratic(const GramLattice& l, const Vec& x) {
    require_even(l);
    if (determinant(l) == 0) throw DegenerateLattice("quadratic form of a degenerate lattice");
    return mod(bilinear(l.rational_gram(), x, x), Rational(2));
}

Rational discriminant_bilinear(const GramLattice& l, const Vec& x, const Vec& y) {
    return mod(bilinear(l.rational_gram(), x, y), Rational(1));
}

std::uint64_t enumeration_bound_from_env() {
    if (const char* env = std::getenv("KSTAB_ENUM_BOUND")) {
        try {
            const auto v = std::stoull(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
        throw ParseError(std::string("KSTAB_ENUM_BOUND is not a positive integer: ") + env);
    }
    return kDefaultEnumerationBound;
}

std::vector<Vec> isotropic_elements(const GramLattice& l, std::uint64_t bound) {
    require_even(l);
    const DiscriminantGroup g = discriminant_group(l);
    require_enumerable(g, bound);
    const ScaledForm form(g);
    std::vector<Vec> out;
    for (auto idx : isotropic_indices(form, g.order().get_ui())) out.push_back(element_of(g, form, idx));
    sort_canonical(out);
    return out;
}

std::vector<Vec> isotropic_elements_serial(const GramLattice& l, std::uint64_t bound) {
    require_even(l);
    const DiscriminantGroup g = discriminant_group(l);
    require_enumerable(g, bound);
    const std::uint64_t order = g.order().get_ui();
    std::vector<Vec> out;
    for (std::uint64_t idx = 0; idx < order; ++idx) {
        const Vec x = g.element(g.coefficients_of(idx));
        if (discriminant_quadratic(l, x) == 0) out.push_back(x);
    }
    sort_canonical(out);
    return out;
}

bool is_primitivity_forced(const GramLattice& l, std::uint64_t bound) {
    return isotropic_elements(l, bound).size() == 1;
}

namespace {

Overlattice build_overlattice(const GramLattice& l, const std::vector<Vec>& subgroup) {
    const std::size_t n = l.rank();
    Integer den = 1;
    for (const auto& x : subgroup)
        for (const auto& c : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    IntMatrix gens(n + subgroup.size(), n);
    for (std::size_t i = 0; i < n; ++i) gens(i, i) = den;
    for (std::size_t k = 0; k < subgroup.size(); ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            const Rational scaled = subgroup[k][j] * Rational(den);
            gens(n + k, j) = scaled.get_num();
        }
    }
    const IntMatrix hnf = row_hermite_basis(gens);
    Matrix basis(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) basis(i, j) = frac(hnf(i, j), den);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) basis(i, j).canonicalize();
    const Matrix g = basis * l.rational_gram() * basis.transpose();
    IntMatrix gi(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (g(i, j).get_den() != 1) throw DomainError("overlattice Gram is not integral");
            gi(i, j) = g(i, j).get_num();
        }
    return Overlattice{GramLattice(gi), basis, subgroup};
}

}  // namespace

std::vector<Overlattice> even_overlattices(const GramLattice& l, std::uint64_t bound) {
    require_even(l);
    const DiscriminantGroup g = discriminant_group(l);
    require_enumerable(g, bound);
    const ScaledForm form(g);
    const auto iso = isotropic_indices(form, g.order().get_ui());

    using Subgroup = std::vector<std::uint64_t>;
    std::set<Subgroup> seen;
    std::deque<Subgroup> queue;
    seen.insert({0});
    queue.push_back({0});
    while (!queue.empty()) {
        const Subgroup h = queue.front();
        queue.pop_front();
        for (auto x : iso) {
            if (std::binary_search(h.begin(), h.end(), x)) continue;
            const auto cx = form.decode(x);
            bool ok = true;
            for (auto y : h) {
                if (!form.orthogonal(cx, form.decode(y))) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            std::set<std::uint64_t> grown(h.begin(), h.end());
            std::vector<std::uint64_t> coset(h.begin(), h.end());
            for (;;) {
                for (auto& e : coset) e = form.add(e, x);
                if (grown.count(coset.front())) break;
                grown.insert(coset.begin(), coset.end());
            }
            Subgroup next(grown.begin(), grown.end());
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }

    std::vector<Subgroup> ordered(seen.begin(), seen.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const Subgroup& a, const Subgroup& b) { return a.size() < b.size(); });
    std::vector<Overlattice> out;
    for (const auto& h : ordered) {
        std::vector<Vec> elems;
        for (auto idx : h) elems.push_back(element_of(g, form, idx));
        sort_canonical(elems);
        out.push_back(build_overlattice(l, elems));
    }
    return out;
}

bool is_saturated(const GramLattice& ambient, const std::vector<IntVec>& sub_basis) {
    const std::size_t n = ambient.rank();
    if (sub_basis.empty()) return true;
    IntMatrix m(sub_basis.size(), n);
    for (std::size_t i = 0; i < sub_basis.size(); ++i) {
        if (sub_basis[i].size() != n) throw DimensionMismatch("sublattice vector size");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = sub_basis[i][j];
    }
    if (rank(to_rational(m)) < sub_basis.size()) throw DependentBasis("sublattice basis is dependent");
    const SmithForm snf = smith_normal_form(m);
    return std::all_of(snf.diagonal.begin(), snf.diagonal.end(),
                       [](const Integer& d) { return d == 1; });
}

namespace {

bool compare(__int128 value, Comparison cmp) {
    switch (cmp) {
        case Comparison::less: return value < 0;
        case Comparison::less_equal: return value <= 0;
        case Comparison::equal: return value == 0;
        case Comparison::greater_equal: return value >= 0;
        case Comparison::greater: return value > 0;
    }
    return false;
}

__int128 value_at(const QuadraticCondition& q, std::int64_t a, std::int64_t b) {
    const __int128 A = a;
    const __int128 B = b;
    return q.c_aa * A * A + q.c_ab * A * B + q.c_bb * B * B + q.c_a * A + q.c_b * B + q.c_0;
}

void validate_box(const Box& box) {
    if (box.empty() || box.size() > 2) throw DomainError("search box needs one or two ranges");
    for (const auto& [lo, hi] : box) {
        if (lo > hi) throw DomainError("empty search range");
        if (lo < -(std::int64_t{1} << 30) || hi > (std::int64_t{1} << 30)) {
            throw DomainError("search range exceeds 2^30");
        }
    }
}

}  // namespace

std::vector<std::vector<std::int64_t>> integer_search_quadratic(const QuadraticCondition& q,
                                                                const Box& box) {
    validate_box(box);
    const auto [alo, ahi] = box[0];
    const bool two = box.size() == 2;
    const std::int64_t blo = two ? box[1].first : 0;
    const std::int64_t bhi = two ? box[1].second : 0;
    const std::int64_t rows = ahi - alo + 1;
    std::vector<std::vector<std::vector<std::int64_t>>> per_row(static_cast<std::size_t>(rows));
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t r = 0; r < rows; ++r) {
        const std::int64_t a = alo + r;
        auto& out = per_row[static_cast<std::size_t>(r)];
        for (std::int64_t b = blo; b <= bhi; ++b) {
            if (compare(value_at(q, a, b), q.cmp)) {
                out.push_back(two ? std::vector<std::int64_t>{a, b} : std::vector<std::int64_t>{a});
            }
        }
    }
    std::vector<std::vector<std::int64_t>> all;
    for (auto& row : per_row) all.insert(all.end(), row.begin(), row.end());
    return all;
}

std::vector<std::vector<std::int64_t>> integer_search_quadratic_serial(const QuadraticCondition& q,
                                                                       const Box& box) {
    validate_box(box);
    std::vector<std::vector<std::int64_t>> all;
    const bool two = box.size() == 2;
    for (std::int64_t a = box[0].first; a <= box[0].second; ++a) {
        if (!two) {
            if (compare(value_at(q, a, 0), q.cmp)) all.push_back({a});
            continue;
        }
        for (std::int64_t b = box[1].first; b <= box[1].second; ++b) {
            if (compare(value_at(q, a, b), q.cmp)) all.push_back({a, b});
        }
    }
    return all;
}

}  // namespace kstab::lattice
