#include "doctest.h"
#include "oracles.hpp"
#include "zariski_oracle.hpp"

#include "kstab/errors.hpp"
#include "kstab/zariski.hpp"

#include <random>

using namespace kstab;
using namespace kstab::zariski;
using intersect::dp4_surface;
using intersect::quadric_surface;

namespace {

const Rational half = frac(1, 2);
const Vec kDp4Base{4, -1, -1, -1, -1, -1};
const Vec kDp4Slope{-2, half, half, half, half, half};

void check_result_invariants(const SurfaceModel& s, const Vec& d, const ZariskiResult& r) {
    CHECK(r.positive + r.negative_class == d);
    Vec n = zero_vec(s.rank());
    for (const auto& [label, coeff] : r.negative) {
        CHECK(coeff > 0);
        for (const auto& c : s.negative_curves) {
            if (c.label != label) continue;
            CHECK(s.pair(r.positive, c.value) == 0);
            n = n + coeff * c.value;
        }
    }
    CHECK(n == r.negative_class);
    for (const auto& c : s.negative_curves) CHECK(s.pair(r.positive, c.value) >= 0);
    if (r.support_gram.rows() > 0) CHECK(is_negative_definite(r.support_gram));
    CHECK(r.volume == s.square(r.positive));
    CHECK(r.volume >= 0);
}

}  // namespace

TEST_CASE("zariski_decompose examples") {
    const auto s = dp4_surface();
    const Vec d{frac(9, 4), -1, -1, -1, -1, -1};
    const auto r = zariski_decompose(s, d);
    CHECK(r.positive == Rational(frac(1, 4)) * Vec{5, -2, -2, -2, -2, -2});
    REQUIRE(r.negative.size() == 1);
    CHECK(r.negative[0].first == "conic");
    CHECK(r.negative[0].second == half);
    check_result_invariants(s, d, r);

    const Vec nef{3, -2, 0, 0, 0, 0};
    const auto r2 = zariski_decompose(s, nef);
    CHECK(r2.positive == nef);
    CHECK(r2.negative.empty());
    for (const auto& c : s.negative_curves) CHECK(s.pair(nef, c.value) >= 0);

    CHECK_THROWS_AS(zariski_decompose(s, {1, -2, 0, 0, 0, 0}), NotPseudoEffective);
    CHECK_FALSE(is_pseudo_effective(s, {1, -2, 0, 0, 0, 0}));
}

TEST_CASE("inconsistent curve data is detected") {
    // Two declared "curves" meeting too much to be contracted together, and an
    // effective cone that admits a class negative on both.
    SurfaceModel s;
    s.name = "bad";
    s.basis = {"a", "b"};
    s.gram = Matrix{{-1, 2}, {2, -1}};
    s.canonical = {0, 0};
    s.negative_curves = {{"a", {1, 0}}, {"b", {0, 1}}};
    s.eff_cone = {{"a", {1, 0}}, {"b", {0, 1}}, {"g", {-1, -1}}};
    CHECK_THROWS_AS(zariski_decompose(s, {-1, -1}), IndefiniteSupport);
}

TEST_CASE("pseff_threshold examples") {
    const auto s = dp4_surface();
    CHECK(pseff_threshold(s, kDp4Base, {1, -1, -1, 0, 0, 0}) == frac(5, 2));
    CHECK(pseff_threshold(s, kDp4Base, {1, 0, 0, 0, 0, 0}) == 2);
    CHECK(pseff_threshold(quadric_surface(), {3, 2}, {1, 1}) == 2);
    CHECK_THROWS_AS(pseff_threshold(quadric_surface(), {3, 2}, {-1, 0}), UnboundedDirection);
    CHECK_THROWS_AS(pseff_threshold(quadric_surface(), {-1, 2}, {1, 0}), NotPseudoEffective);
}

TEST_CASE("one_param_volume examples") {
    const auto s = dp4_surface();
    const auto v = one_param_volume(s, kDp4Base, {-1, 0, 0, 0, 0, 0}, 0, 2);
    const Polynomial x = Polynomial::variable("s");
    REQUIRE(v.volume.pieces().size() == 2);
    CHECK(v.volume.pieces()[0].hi == frac(3, 2));
    CHECK(v.volume.pieces()[0].poly == (4 - x).pow(2) - 5);
    CHECK(v.volume.pieces()[1].poly == 5 * (2 - x).pow(2));
    CHECK(v.chambers[1].support == std::vector<std::string>{"conic"});

    const auto q = one_param_volume(quadric_surface(), {3, 2}, {-1, -1}, 0, 2);
    REQUIRE(q.volume.pieces().size() == 1);
    CHECK(q.volume.pieces()[0].poly == 2 * (3 - x) * (2 - x));

    const auto c = one_param_volume(s, {3, -1, -1, 0, 0, 0}, zero_vec(6), 0, 1);
    REQUIRE(c.volume.pieces().size() == 1);
    CHECK(c.volume.pieces()[0].poly == Polynomial(7));
}

TEST_CASE("two_param_flag_volume: Z = L") {
    const auto fv = two_param_flag_volume(dp4_surface(), kDp4Base, kDp4Slope, 0, 2, {1, 0, 0, 0, 0, 0});
    REQUIRE(fv.chambers.size() == 1);
    const auto& ch = fv.chambers[0];
    const Polynomial t = Polynomial::variable("t");
    const Polynomial s = Polynomial::variable("s");
    REQUIRE(ch.walls.size() == 3);
    CHECK(ch.walls[1] == Rational(frac(1, 4)) * (6 - 3 * t));
    CHECK(ch.walls[2] == 2 - t);
    CHECK(ch.cells[0].volume == (4 - 2 * t - s).pow(2) - Rational(frac(5, 4)) * (2 - t).pow(2));
    CHECK(ch.cells[1].volume == 5 * (2 - t - s).pow(2));
    CHECK(fv.integral() * 3 / 22 == frac(53, 88));
}

TEST_CASE("two_param_flag_volume: Z = L - e1 - e2 cell structure") {
    const auto fv = two_param_flag_volume(dp4_surface(), kDp4Base, kDp4Slope, 0, 2, {1, -1, -1, 0, 0, 0});
    REQUIRE(fv.chambers.size() == 1);
    const auto& ch = fv.chambers[0];
    const Polynomial t = Polynomial::variable("t");
    const Polynomial s = Polynomial::variable("s");
    const Polynomial x = half * (2 - t);
    REQUIRE(ch.walls.size() == 4);
    CHECK(ch.walls[1] == x);
    CHECK(ch.walls[2] == 2 * x);
    CHECK(ch.walls[3] == Rational(frac(5, 2)) * x);
    CHECK(ch.walls.back() == Rational(frac(5, 4)) * (2 - t));
    CHECK(ch.cells[0].volume == 11 * x.pow(2) - 4 * x * s - s.pow(2));
    CHECK(ch.cells[1].volume == (4 * x - s).pow(2) - 3 * x.pow(2));
    CHECK(ch.cells[2].volume == (5 * x - 2 * s).pow(2));
    CHECK(fv.integral() * 3 / 22 == frac(73, 88));
}

TEST_CASE("two_param_flag_volume: quadric diagonal") {
    const auto q = quadric_surface();
    const auto a = two_param_flag_volume(q, {3, 0}, {-1, 2}, 0, 1, {1, 1});
    const auto b = two_param_flag_volume(q, {4, 4}, {-2, -2}, 1, 2, {1, 1});
    const Polynomial u = Polynomial::variable("t");
    const Polynomial v = Polynomial::variable("s");
    REQUIRE(a.chambers.size() == 1);
    REQUIRE(a.chambers[0].cells.size() == 1);
    CHECK(a.chambers[0].walls[1] == 2 * u);
    CHECK(a.chambers[0].cells[0].volume == 2 * (3 - u - v) * (2 * u - v));
    CHECK(a.integral() == frac(7, 3));
    CHECK(b.integral() == frac(4, 3));
    CHECK((a.integral() + b.integral()) * 3 / 22 == half);
}

TEST_CASE("flag cells agree with pointwise decompositions") {
    const auto s = dp4_surface();
    for (const Vec& z : {Vec{1, 0, 0, 0, 0, 0}, Vec{1, -1, -1, 0, 0, 0}}) {
        const auto fv = two_param_flag_volume(s, kDp4Base, kDp4Slope, 0, 2, z);
        for (const auto& ch : fv.chambers)
            for (const auto& cell : ch.cells)
                for (int i = 1; i < 8; ++i) {
                    const Rational t = ch.lo + (ch.hi - ch.lo) * frac(i, 8);
                    const Rational lo = cell.lower(t), hi = cell.upper(t);
                    for (int j = 1; j < 4; ++j) {
                        const Rational sv = lo + (hi - lo) * frac(j, 4);
                        const Vec d = kDp4Base + t * kDp4Slope - sv * z;
                        const auto r = zariski_decompose(s, d);
                        CHECK(r.volume == cell.volume.evaluate({{"s", sv}, {"t", t}}));
                        CHECK(r.positive == cell.p_const + t * cell.p_t + sv * cell.p_s);
                    }
                }
    }
}

TEST_CASE("flag integral agrees with numeric quadrature") {
    const auto fv = two_param_flag_volume(dp4_surface(), kDp4Base, kDp4Slope, 0, 2, {1, 0, 0, 0, 0, 0});
    double numeric = 0;
    for (const auto& ch : fv.chambers)
        for (const auto& cell : ch.cells) {
            numeric += oracle::simpson([&](double t) {
                const double lo = cell.lower.evaluate_double({{"t", t}});
                const double hi = cell.upper.evaluate_double({{"t", t}});
                return oracle::simpson([&](double s) { return cell.volume.evaluate_double({{"s", s}, {"t", t}}); },
                                       lo, hi, 1e-12);
            }, to_double(ch.lo), to_double(ch.hi), 1e-11);
        }
    CHECK(std::fabs(numeric - to_double(fv.integral())) < 1e-8);
}

TEST_CASE("property: iterative support equals exhaustive search") {
    const auto s = dp4_surface();
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        const Vec d = oracle::random_effective_class(s, rng);
        const auto r = zariski_decompose(s, d);
        check_result_invariants(s, d, r);
        const auto found = oracle::exhaustive_zariski(s, d);
        REQUIRE(found.size() == 1);
        CHECK(found[0].positive == r.positive);
        std::vector<std::string> labels;
        for (auto i : found[0].support) labels.push_back(s.negative_curves[i].label);
        std::vector<std::string> got;
        for (const auto& [label, coeff] : r.negative) got.push_back(label);
        std::sort(labels.begin(), labels.end());
        std::sort(got.begin(), got.end());
        CHECK(labels == got);
    }
}

TEST_CASE("property: volume is nonincreasing along effective directions") {
    const auto s = dp4_surface();
    std::mt19937_64 rng(91);
    for (int trial = 0; trial < 20; ++trial) {
        const Vec d = oracle::random_effective_class(s, rng);
        const Vec z = s.negative_curves[trial % 16].value + s.negative_curves[(trial * 7 + 3) % 16].value;
        const Rational tau = pseff_threshold(s, d, z);
        if (tau == 0) continue;
        const auto v = one_param_volume(s, d, Rational(-1) * z, 0, tau);
        for (const auto& p : v.volume.pieces()) {
            const Polynomial deriv = p.poly.derivative("s");
            CHECK(deriv(p.lo) <= 0);
            CHECK(deriv(p.hi) <= 0);
        }
        for (const auto& rec : check_c1(v.volume)) CHECK(rec.equal);
        CHECK(v.volume(tau) >= 0);
    }
}

TEST_CASE("threefold_volume_certified") {
    const auto m = intersect::bl_p3_quintic();
    const auto q = threefold_volume_certified(m, m.class_of("Qtilde"), m.chambers.at("Qtilde"), "u");
    const Polynomial u = Polynomial::variable("u");
    REQUIRE(q.volume.pieces().size() == 2);
    CHECK(q.volume.pieces()[0].poly ==
          (4 - 2 * u).pow(3) - 15 * (4 - 2 * u) * (1 - u).pow(2) + 18 * (1 - u).pow(3));
    CHECK(q.volume.pieces()[1].poly == (4 - 2 * u).pow(3));
    CHECK(q.volume.integrate() == 19);

    const auto line = intersect::sing_line_model(12, 0);
    const auto v = threefold_volume_certified(line, line.class_of("E"), line.chambers.at("E"));
    const Polynomial t = Polynomial::variable("t");
    CHECK(v.volume.pieces()[0].poly.to_string() == "22 - 6*t^2 - 4*t^3");
    CHECK(v.volume.pieces()[1].poly == 12 * (2 - t).pow(3));
    const auto c1 = check_c1(v.volume);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].left_derivative == -24);
    CHECK(c1[0].right_derivative == -36);
    CHECK_FALSE(c1[0].equal);

    const auto flat = threefold_volume_certified(m, zero_vec(2), {{0, 1, m.anticanonical, zero_vec(2)}});
    CHECK(flat.volume.pieces()[0].poly == Polynomial(22));
}

TEST_CASE("threefold certificate violations") {
    const auto m = intersect::bl_p3_quintic();
    // Keeping the positive part at 4H - E past u = 1 forces a negative E-coefficient.
    CHECK_THROWS_AS(threefold_volume_certified(m, m.class_of("Qtilde"), {{0, 2, {4, -1}, {-2, 1}}}),
                    CertificateViolation);
    // (4 - 2u) H - E pairs negatively with the 4-secant ruling for u > 0.
    CHECK_THROWS_AS(threefold_volume_certified(m, m.class_of("Qtilde"), {{0, 1, {4, -1}, {-2, 0}}}),
                    CertificateViolation);
}

TEST_CASE("batched decompositions match the serial reference") {
    const auto s = dp4_surface();
    std::mt19937_64 rng(5);
    std::vector<Vec> classes;
    for (int i = 0; i < 40; ++i) classes.push_back(oracle::random_effective_class(s, rng));
    const auto par = zariski_decompose_batch(s, classes);
    const auto ser = zariski_decompose_batch_serial(s, classes);
    REQUIRE(par.size() == classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        CHECK(par[i].positive == ser[i].positive);
        CHECK(par[i].negative == ser[i].negative);
        CHECK(par[i].volume == ser[i].volume);
    }
    classes.push_back(Vec{-1, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(zariski_decompose_batch(s, classes), NotPseudoEffective);
}
