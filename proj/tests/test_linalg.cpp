#include "doctest.h"
#include "oracles.hpp"

#include "kstab/linalg.hpp"

#include <random>

using namespace kstab;

TEST_CASE("determinant agrees with cofactor expansion") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> e(-7, 7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 4;
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = e(rng);
        const Integer expected = oracle::cofactor_determinant(m);
        CHECK(determinant(m) == expected);
        CHECK(determinant(to_rational(m)) == Rational(expected));
    }
}

TEST_CASE("inverse and solve") {
    const Matrix a{{2, 1}, {1, 1}};
    const Matrix inv = inverse(a);
    CHECK(a * inv == Matrix::identity(2));
    const auto x = solve(a, {3, 2});
    REQUIRE(x);
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 1);
    CHECK_FALSE(solve(Matrix{{1, 2}, {2, 4}}, {1, 1}));
}

TEST_CASE("inertia handles zero diagonals") {
    CHECK(inertia(Matrix{{0, 1}, {1, 0}}) == Inertia{1, 1, 0});
    CHECK(inertia(Matrix{{22, 14}, {14, 8}}) == Inertia{1, 1, 0});
    CHECK(inertia(Matrix{{1, 0, 0}, {0, 0, 0}, {0, 0, -3}}) == Inertia{1, 1, 1});
    CHECK(is_negative_definite(Matrix{{-1, 0}, {0, -1}}));
    CHECK_FALSE(is_negative_definite(Matrix{{-1, 1}, {1, -1}}));
}

TEST_CASE("smith normal form certificate") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> e(-9, 9);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + trial % 3;
        const std::size_t c = 1 + (trial / 3) % 3;
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a(i, j) = e(rng);
        const SmithForm s = smith_normal_form(a);
        CHECK(s.u * a * s.v == s.d);
        CHECK(abs(determinant(s.u)) == 1);
        CHECK(abs(determinant(s.v)) == 1);
        for (std::size_t k = 0; k + 1 < s.diagonal.size(); ++k) {
            if (s.diagonal[k] != 0) CHECK(s.diagonal[k + 1] % s.diagonal[k] == 0);
            CHECK(s.diagonal[k] >= 0);
        }
    }
    CHECK(smith_normal_form(IntMatrix{{22, 0}, {0, -2}}).diagonal == std::vector<Integer>{2, 22});
}

TEST_CASE("exact simplex") {
    // max x + y s.t. x + 2y + s1 = 4, 3x + y + s2 = 6
    const Matrix a{{1, 2, 1, 0}, {3, 1, 0, 1}};
    const auto r = lp::maximize(a, {4, 6}, {1, 1, 0, 0});
    REQUIRE(r.status == lp::Status::optimal);
    CHECK(r.value == frac(14, 5));
    const auto inf = lp::maximize(Matrix{{1, 1}}, {-1}, {1, 0});
    CHECK(inf.status == lp::Status::infeasible);
    const auto unb = lp::maximize(Matrix{{1, -1}}, {0}, {1, 0});
    CHECK(unb.status == lp::Status::unbounded);
}
