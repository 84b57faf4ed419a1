#include "doctest.h"
#include "oracles.hpp"
#include "toric_oracle.hpp"

#include "kstab/errors.hpp"
#include "kstab/toric.hpp"

#include <algorithm>
#include <random>

using namespace kstab;
using namespace kstab::toric;

namespace {

LatticePolytope poly(const std::vector<IntVec>& pts) { return LatticePolytope::from_integer(pts); }

LatticePolytope prism() {
    return poly({{1, 0, 1}, {1, 0, -1}, {0, 1, 1}, {0, 1, -1}, {-1, -1, 1}, {-1, -1, -1}});
}
LatticePolytope cube() {
    std::vector<IntVec> pts;
    for (int x : {-1, 1})
        for (int y : {-1, 1})
            for (int z : {-1, 1}) pts.push_back({x, y, z});
    return poly(pts);
}
LatticePolytope octahedron() {
    return poly({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
}
LatticePolytope simplex() { return poly({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}); }
LatticePolytope asymmetric() {
    return poly({{1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {0, 0, -1}});
}

std::vector<Point> sorted(std::vector<Point> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Point> points(const std::vector<IntVec>& pts) {
    std::vector<Point> out;
    for (const auto& p : pts) out.push_back(to_vec(p));
    return sorted(out);
}

const Point kOrigin{0, 0, 0};

}  // namespace

TEST_CASE("hull drops interior and redundant points") {
    const auto p = poly({{1, 0, 1}, {1, 0, -1}, {0, 1, 1}, {0, 1, -1}, {-1, -1, 1}, {-1, -1, -1}, {0, 0, 0},
                         {0, 0, 1}, {1, 0, 0}});
    CHECK(p == prism());
    CHECK(p.vertices().size() == 6);
    CHECK(p.facets().size() == 5);
    CHECK(cube().facets().size() == 6);
    CHECK(octahedron().facets().size() == 8);
    CHECK(p.contains_strictly(kOrigin));
    CHECK_FALSE(p.contains_strictly({1, 0, 0}));
    CHECK(p.contains({1, 0, 0}));
}

TEST_CASE("degenerate point sets are rejected") {
    CHECK_THROWS_AS(poly({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), DegeneratePolytope);
    CHECK_THROWS_AS(poly({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}}), DegeneratePolytope);
    CHECK_THROWS_AS(poly({{0, 0, 0}}), DegeneratePolytope);
}

TEST_CASE("polar_dual examples") {
    CHECK(polar_dual(prism()).vertices() == points({{2, -1, 0}, {-1, 2, 0}, {-1, -1, 0}, {0, 0, 1}, {0, 0, -1}}));
    CHECK(polar_dual(cube()) == octahedron());
    CHECK(polar_dual(polar_dual(prism())) == prism());
    CHECK(polar_dual(polar_dual(simplex())) == simplex());
    const auto shifted = poly({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    CHECK_THROWS_AS(polar_dual(shifted), OriginNotInterior);
    CHECK_THROWS_AS(is_reflexive(shifted), OriginNotInterior);
}

TEST_CASE("is_reflexive examples") {
    CHECK(is_reflexive(prism()));
    CHECK(is_reflexive(cube()));
    CHECK(is_reflexive(octahedron()));
    const auto stretched = poly({{2, 0, 0}, {-2, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
    CHECK_FALSE(is_reflexive(stretched));
    bool has_half = false;
    const auto stretched_dual = polar_dual(stretched);
    for (const auto& v : stretched_dual.vertices()) has_half = has_half || v[0] == frac(1, 2) || v[0] == frac(-1, 2);
    CHECK(has_half);
    CHECK_THROWS_AS(anticanonical_degree(stretched), NotReflexive);
    CHECK_THROWS_AS(toric_kps_check(stretched), NotReflexive);
}

TEST_CASE("volume and barycenter examples") {
    const auto bip = polar_dual(prism());
    CHECK(volume(bip) == 3);
    CHECK(barycenter(bip) == kOrigin);
    CHECK(volume(cube()) == 8);
    CHECK(barycenter(cube()) == kOrigin);
    CHECK(volume(prism()) == 3);
    CHECK(barycenter(prism()) == kOrigin);
    const auto corner = poly({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(volume(corner) == frac(1, 6));
    CHECK(barycenter(corner) == Point{frac(1, 4), frac(1, 4), frac(1, 4)});
    CHECK_THROWS_AS(volume(corner, {1, 1, 1}), DomainError);
}

TEST_CASE("anticanonical_degree and toric_kps_check examples") {
    CHECK(anticanonical_degree(prism()) == 18);
    CHECK(anticanonical_degree(simplex()) == 64);
    CHECK(anticanonical_degree(octahedron()) == 48);
    CHECK(anticanonical_degree(cube()) == 8);
    CHECK(toric_kps_check(prism()).polystable);
    CHECK(toric_kps_check(simplex()).polystable);
    const auto a = asymmetric();
    REQUIRE(is_reflexive(a));
    CHECK(anticanonical_degree(a) == 48);
    const auto k = toric_kps_check(a);
    CHECK_FALSE(k.polystable);
    CHECK_FALSE(is_zero(k.barycenter));
}

TEST_CASE("engine agrees with the origin-fan oracle") {
    for (const auto& p : {prism(), cube(), octahedron(), simplex(), asymmetric(), polar_dual(prism()),
                          polar_dual(asymmetric())}) {
        const auto m = oracle::origin_fan_moments(p);
        CHECK(volume(p) == m.volume);
        CHECK(barycenter(p) == Rational(1) / m.volume * m.moment);
    }
}

TEST_CASE("property: second seeded triangulation gives the same moments") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> w(1, 9);
    for (const auto& p : {prism(), asymmetric(), polar_dual(asymmetric()), simplex()}) {
        for (int trial = 0; trial < 5; ++trial) {
            Point apex = zero_vec(3);
            Rational total = 0;
            for (const auto& v : p.vertices()) {
                const Rational c = w(rng);
                apex = apex + c * v;
                total += c;
            }
            apex = Rational(1) / total * apex;
            CHECK(volume(p, apex) == volume(p));
            CHECK(barycenter(p, apex) == barycenter(p));
        }
    }
}

TEST_CASE("property: unimodular equivariance") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        const IntMatrix m = oracle::random_unimodular(3, rng);
        const Matrix q = to_rational(m);
        for (const auto& p : {prism(), asymmetric()}) {
            const auto mp = p.transformed(m);
            CHECK(volume(mp) == volume(p));
            CHECK(barycenter(mp) == q * barycenter(p));
            CHECK(anticanonical_degree(mp) == anticanonical_degree(p));
            CHECK(toric_kps_check(mp).polystable == toric_kps_check(p).polystable);
        }
    }
    CHECK_THROWS_AS(prism().transformed(IntMatrix{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}), DomainError);
}
