#pragma once
// Brute-force discriminant groups and random even lattices for the test suites.

#include "kstab/lattice.hpp"

#include <random>
#include <set>

namespace oracle {

using kstab::Integer;
using kstab::IntMatrix;
using kstab::Matrix;
using kstab::Vec;
using kstab::lattice::GramLattice;

/// Brute-force discriminant group: all G^{-1} y for y in [0, |det|)^n, reduced.
inline std::set<Vec> brute_force_group(const GramLattice& l) {
    const Integer det = abs(kstab::lattice::determinant(l));
    const Matrix inv = kstab::inverse(l.rational_gram());
    const std::size_t n = l.rank();
    std::set<Vec> out;
    std::vector<long> y(n, 0);
    const long bound = det.get_si();
    for (;;) {
        Vec yy(n);
        for (std::size_t i = 0; i < n; ++i) yy[i] = y[i];
        out.insert(kstab::lattice::reduce_mod_lattice(inv * yy));
        std::size_t k = 0;
        while (k < n && ++y[k] == bound) y[k++] = 0;
        if (k == n) break;
    }
    return out;
}

inline bool brute_force_feasible(const GramLattice& l) {
    Integer work = 1;
    for (std::size_t i = 0; i < l.rank(); ++i) work *= abs(kstab::lattice::determinant(l));
    return work <= 40000;
}

inline GramLattice random_even(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> e(-4, 4);
    for (;;) {
        IntMatrix g(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            g(i, i) = 2 * e(rng);
            for (std::size_t j = i + 1; j < n; ++j) g(i, j) = g(j, i) = e(rng);
        }
        const Integer d = kstab::determinant(g);
        if (d != 0 && abs(d) <= 500) return GramLattice(g);
    }
}


}  // namespace oracle
