#pragma once
// Exhaustive Zariski decomposition: try every negative-definite subset of the
// declared curves and keep the ones satisfying all defining conditions.

#include "kstab/intersect.hpp"

#include <optional>
#include <random>
#include <vector>

namespace oracle {

using kstab::Matrix;
using kstab::operator*;
using kstab::operator+;
using kstab::operator-;
using kstab::Rational;
using kstab::Vec;
using kstab::intersect::SurfaceModel;

struct ExhaustiveResult {
    std::vector<std::size_t> support;
    Vec positive;
};

inline std::vector<ExhaustiveResult> exhaustive_zariski(const SurfaceModel& s, const Vec& d) {
    const auto& curves = s.negative_curves;
    const std::size_t m = curves.size();
    std::vector<std::vector<Rational>> cc(m, std::vector<Rational>(m));
    std::vector<Rational> dc(m);
    for (std::size_t i = 0; i < m; ++i) {
        dc[i] = s.pair(d, curves[i].value);
        for (std::size_t j = 0; j < m; ++j) cc[i][j] = s.pair(curves[i].value, curves[j].value);
    }
    auto gram_of = [&](const std::vector<std::size_t>& idx) {
        Matrix g(idx.size(), idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) g(i, j) = cc[idx[i]][idx[j]];
        return g;
    };
    std::vector<ExhaustiveResult> found;
    auto test = [&](const std::vector<std::size_t>& idx) {
        const std::size_t n = idx.size();
        Vec x;
        if (n > 0) {
            Vec rhs(n);
            for (std::size_t i = 0; i < n; ++i) rhs[i] = dc[idx[i]];
            const auto sol = kstab::solve(gram_of(idx), rhs);
            if (!sol) return;
            x = *sol;
            for (const auto& xi : x)
                if (xi <= 0) return;
        }
        for (std::size_t k = 0; k < m; ++k) {
            Rational pk = dc[k];
            for (std::size_t i = 0; i < n; ++i) pk -= x[i] * cc[idx[i]][k];
            if (pk < 0) return;
        }
        Vec p = d;
        for (std::size_t i = 0; i < n; ++i) p = p - x[i] * curves[idx[i]].value;
        found.push_back({idx, p});
    };
    // Depth-first over increasing index sequences. Every prefix of a subset is
    // visited first, so Sylvester's criterion only needs the newest minor.
    std::vector<std::size_t> subset;
    auto dfs = [&](auto&& self, std::size_t start) -> void {
        test(subset);
        for (std::size_t c = start; c < m; ++c) {
            subset.push_back(c);
            const Rational det = kstab::determinant(gram_of(subset));
            if (subset.size() % 2 == 1 ? det < 0 : det > 0) self(self, c + 1);
            subset.pop_back();
        }
    };
    dfs(dfs, 0);
    return found;
}

/// Nonnegative combination of the declared curves plus a multiple of -K.
inline Vec random_effective_class(const SurfaceModel& s, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(0, 12);
    std::uniform_int_distribution<int> den(1, 4);
    std::bernoulli_distribution use(0.3);
    Vec d = kstab::zero_vec(s.rank());
    for (const auto& c : s.negative_curves)
        if (use(rng)) d = d + kstab::frac(num(rng), den(rng)) * c.value;
    d = d - kstab::frac(num(rng), den(rng)) * s.canonical;
    return d;
}

}  // namespace oracle
