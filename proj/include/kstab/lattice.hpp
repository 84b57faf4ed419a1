#pragma once

#include "kstab/linalg.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace kstab::lattice {

/// Integral lattice given by a symmetric Gram matrix in a fixed basis.
class GramLattice {
public:
    explicit GramLattice(IntMatrix gram);
    GramLattice(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rank() const { return gram_.rows(); }
    const IntMatrix& gram() const { return gram_; }
    Matrix rational_gram() const { return to_rational(gram_); }
    bool is_even() const;
    bool operator==(const GramLattice& o) const { return gram_ == o.gram_; }

private:
    IntMatrix gram_;
};

Integer determinant(const GramLattice& l);
Inertia signature(const GramLattice& l);
/// v^T G v and v^T G w; DimensionMismatch on size errors.
Integer evaluate(const GramLattice& l, const IntVec& v);
Integer pair(const GramLattice& l, const IntVec& v, const IntVec& w);

/// Lambda^dual / Lambda. Elements are rational coordinate vectors in the
/// lattice basis, reduced to [0,1)^n; generators have orders `factors`.
struct DiscriminantGroup {
    std::vector<Integer> factors;   // ascending, each > 1, d_i | d_{i+1}
    std::vector<Vec> generators;    // reduced dual vectors, one per factor
    Matrix gram;                    // rational copy of the lattice Gram

    Integer order() const;
    /// sum c_i * g_i reduced modulo the lattice.
    Vec element(const std::vector<long>& coefficients) const;
    /// Mixed-radix index -> coefficient tuple.
    std::vector<long> coefficients_of(std::uint64_t index) const;
};

/// Canonical representative of x modulo Z^n.
Vec reduce_mod_lattice(const Vec& x);

DiscriminantGroup discriminant_group(const GramLattice& l);

/// q(x) = x^T G x modulo 2, representative in [0, 2). OddLattice if not even.
Rational discriminant_quadratic(const GramLattice& l, const Vec& x);
/// b(x, y) = x^T G y modulo 1, representative in [0, 1).
Rational discriminant_bilinear(const GramLattice& l, const Vec& x, const Vec& y);

constexpr std::uint64_t kDefaultEnumerationBound = 1'000'000;

/// Bound from KSTAB_ENUM_BOUND when set, otherwise kDefaultEnumerationBound.
std::uint64_t enumeration_bound_from_env();

/// All x in A_L with q(x) = 0 (mod 2), including 0, in sorted canonical order.
/// Parallel kernel; GroupTooLarge when |det| exceeds `bound`.
std::vector<Vec> isotropic_elements(const GramLattice& l,
                                    std::uint64_t bound = kDefaultEnumerationBound);
/// Single-threaded reference evaluating q directly on every reduced element.
std::vector<Vec> isotropic_elements_serial(const GramLattice& l,
                                           std::uint64_t bound = kDefaultEnumerationBound);

bool is_primitivity_forced(const GramLattice& l, std::uint64_t bound = kDefaultEnumerationBound);

struct Overlattice {
    GramLattice lattice;
    Matrix basis;                  // rows: new basis vectors in old coordinates
    std::vector<Vec> subgroup;     // isotropic subgroup H (reduced elements, sorted)
};

/// One even overlattice per isotropic subgroup H (H = 0 first), det = det(L) / |H|^2.
std::vector<Overlattice> even_overlattices(const GramLattice& l,
                                           std::uint64_t bound = kDefaultEnumerationBound);

/// True iff the integer span of `sub_basis` is a direct summand of Z^rank.
bool is_saturated(const GramLattice& ambient, const std::vector<IntVec>& sub_basis);

enum class Comparison { less, less_equal, equal, greater_equal, greater };

/// c_aa a^2 + c_ab a b + c_bb b^2 + c_a a + c_b b + c_0  (cmp)  0
struct QuadraticCondition {
    std::int64_t c_aa = 0, c_ab = 0, c_bb = 0, c_a = 0, c_b = 0, c_0 = 0;
    Comparison cmp = Comparison::greater;
};

/// Inclusive integer ranges, one per variable (1 or 2 variables).
using Box = std::vector<std::pair<std::int64_t, std::int64_t>>;

/// Exhaustive solutions inside the box in lexicographic order. With a single
/// range only the `a` terms are used. Parallel kernel.
std::vector<std::vector<std::int64_t>> integer_search_quadratic(const QuadraticCondition& q,
                                                                const Box& box);
std::vector<std::vector<std::int64_t>> integer_search_quadratic_serial(const QuadraticCondition& q,
                                                                       const Box& box);

}  // namespace kstab::lattice
