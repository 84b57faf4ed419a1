#include "doctest.h"

#include "kstab/errors.hpp"
#include "kstab/intersect.hpp"

#include <random>

using namespace kstab;
using namespace kstab::intersect;

TEST_CASE("triple_product examples") {
    const auto quintic = bl_p3_quintic();
    CHECK(triple_product(quintic, {4, -1}, {4, -1}, {4, -1}) == 22);
    const auto line = sing_line_model(12, 0);
    CHECK(triple_product(line, {1, -1}, {1, -1}, {1, -1}) == 12);
    CHECK(triple_product(quintic, {1, 0}, {1, 0}, {0, 0}) == 0);
    CHECK_THROWS_AS(triple_product(quintic, {1}, {1, 0}, {1, 0}), DimensionMismatch);
}

TEST_CASE("cube of aH - bE on the quintic blowup") {
    const auto m = bl_p3_quintic();
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            CHECK(triple_product(m, {a, -b}, {a, -b}, {a, -b}) == a * a * a - 15 * a * b * b + 18 * b * b * b);
}

TEST_CASE("blowup_p3_curve degrees") {
    CHECK(blowup_p3_curve(5, 0).degree() == 22);
    CHECK(blowup_p3_curve(1, 0).degree() == 54);
    CHECK(blowup_p3_curve(2, 0).degree() == 46);
    // Closed form against the tensor contraction.
    for (int d = 1; d <= 20; ++d)
        for (int g = 0; g <= 5; ++g) CHECK(blowup_p3_curve(d, g).degree() == 62 - 8 * d + 2 * g);
}

TEST_CASE("blowup_node") {
    const auto m = blowup_node(22);
    CHECK(m.degree() == 20);
    const auto s = restrict_to_surface(m, {1, -1}, {{"A", {1, 0}}, {"E", {0, 1}}});
    CHECK(s.gram == Matrix{{22, 0}, {0, -2}});
    CHECK_THROWS_AS(blowup_node(0), DomainError);
}

TEST_CASE("blowup_v4_conic") {
    const auto m = blowup_v4_conic();
    CHECK(m.degree() == 22);
    CHECK(triple_product(m, {1, 0}, {1, 0}, {1, 0}) == 4);
    const auto s = restrict_to_surface(m, {2, -1}, {{"H", {2, -1}}, {"L", {1, 0}}});
    CHECK(s.gram == Matrix{{22, 14}, {14, 8}});
    const auto zero = restrict_to_surface(m, {0, 0}, {{"H", {2, -1}}, {"L", {1, 0}}});
    CHECK(zero.gram == Matrix(2, 2));
}

TEST_CASE("sing_line_model") {
    const auto m = sing_line_model(12, 0);
    CHECK(cube_polynomial(m, {1, 0}, {0, -1}, "t").to_string() == "22 - 6*t^2 - 4*t^3");
    CHECK(triple_product(m, {1, -1}, {1, -1}, {1, -1}) == 12);
    CHECK(triple_product(sing_line_model(12, 3), {0, 1}, {0, 1}, {0, 1}) == 1);
    for (int g = 3; g <= 20; ++g)
        for (int k = 0; k <= 4; ++k) {
            const auto mk = sing_line_model(g, k);
            const Polynomial t = Polynomial::variable("t");
            CHECK(cube_polynomial(mk, {1, 0}, {0, -1}, "t") ==
                  Polynomial(2 * g - 2) - 6 * t.pow(2) - Polynomial(4 - k) * t.pow(3));
        }
}

TEST_CASE("property: trilinear form is symmetric and multilinear") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> e(-5, 5);
    const std::vector<ThreefoldModel> models{bl_p3_quintic(), sing_line_model(13, 2), blowup_v4_conic(),
                                             blowup_node(22)};
    for (const auto& m : models)
        for (int trial = 0; trial < 30; ++trial) {
            const Vec a{e(rng), e(rng)}, b{e(rng), e(rng)}, c{e(rng), e(rng)};
            const Rational abc = triple_product(m, a, b, c);
            CHECK(abc == triple_product(m, b, a, c));
            CHECK(abc == triple_product(m, c, b, a));
            CHECK(abc == triple_product(m, a, c, b));
            const Rational k = frac(e(rng), 3);
            CHECK(triple_product(m, k * a, b, c) == k * abc);
            CHECK(triple_product(m, a + b, b, c) == abc + triple_product(m, b, b, c));
            const auto s = restrict_to_surface(m, c, {{"a", a}, {"b", b}});
            CHECK(s.gram.is_symmetric());
        }
}

TEST_CASE("dp4 and quadric presets") {
    const auto s = dp4_surface();
    CHECK(s.square({2, -1, -1, -1, -1, -1}) == -1);
    CHECK(s.square(s.canonical) == 4);
    REQUIRE(s.negative_curves.size() == 16);
    for (const auto& c : s.negative_curves) {
        CHECK(s.square(c.value) == -1);
        CHECK(-s.pair(s.canonical, c.value) == 1);
    }
    const auto q = quadric_surface();
    CHECK(q.square({3, 2}) == 12);
    CHECK(q.negative_curves.empty());
    CHECK(q.effective_generators().size() == 2);
}

TEST_CASE("class parsing") {
    const std::vector<std::string> labels{"L", "e1", "e2", "e3", "e4", "e5"};
    const Vec v = parse_class("9/4 L - e1 - e2 - e3 - e4 - e5", labels);
    CHECK(v == Vec{frac(9, 4), -1, -1, -1, -1, -1});
    CHECK(parse_class("2*L - (1/2) e1 + e1", labels) == Vec{2, frac(1, 2), 0, 0, 0, 0});
    CHECK(parse_class("-L", labels) == Vec{-1, 0, 0, 0, 0, 0});
    CHECK(parse_class("0", labels) == zero_vec(6));
    CHECK_THROWS_AS(parse_class("L - x", labels), ParseError);
    CHECK_THROWS_AS(parse_class("L e1", labels), ParseError);
    CHECK_THROWS_AS(parse_class("", labels), ParseError);
    CHECK(format_class(v, labels) == "(9/4) L - e1 - e2 - e3 - e4 - e5");
    CHECK(parse_class(format_class(v, labels), labels) == v);
    CHECK(format_class(zero_vec(6), labels) == "0");
}

TEST_CASE("validation rejects malformed models") {
    auto m = blowup_p3_curve(5, 0);
    m.tensor[1] = 7;  // (0,0,1) without its permutations
    CHECK_THROWS_AS(validate(m), DomainError);
    auto s = dp4_surface();
    s.negative_curves.push_back({"bad", {1, 0, 0, 0, 0, 0}});
    CHECK_THROWS_AS(validate(s), DomainError);
}
