#include "verify.hpp"

#include "kstab/errors.hpp"
#include "kstab/k3cat.hpp"
#include "kstab/lattice.hpp"
#include "kstab/stability.hpp"
#include "kstab/toric.hpp"

#include <functional>

namespace kstab::cli {

namespace {

using intersect::ThreefoldModel;
using lattice::GramLattice;

struct Check {
    std::string id;
    std::string description;
    std::string expected;
    std::string anchor;
    std::function<std::string()> compute;
};

std::string str(const Rational& q) { return to_string(q); }
std::string str(const Integer& z) { return to_string(z); }
std::string str(bool b) { return b ? "true" : "false"; }
std::string str(const Inertia& s) { return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + ")"; }

std::string join(const std::vector<std::string>& v, const std::string& sep = "; ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

zariski::VolumeFunction divisor_volume(const ThreefoldModel& m, const std::string& label, const std::string& var) {
    return zariski::threefold_volume_certified(m, m.class_of(label), m.chambers.at(label), var);
}

std::string pieces(const PiecewisePolynomial& f) {
    std::vector<std::string> out;
    for (const auto& p : f.pieces()) out.push_back(p.poly.to_string());
    return join(out);
}

std::string flag_value(const ThreefoldModel& m, const std::string& surface, const Vec& curve) {
    for (const auto& f : m.flags) {
        if (f.surface != surface) continue;
        const auto s = surface == "dp4" ? intersect::dp4_surface() : intersect::quadric_surface();
        return str(stability::refined_s_flag(s, f.chambers, curve, m.degree()).value);
    }
    throw DomainError("no flag on " + surface);
}

// The printed cell volumes for Z = L - e1 - e2, integrated over the printed cells.
Rational printed_l1_integral() {
    const Polynomial t = Polynomial::variable("t");
    const Polynomial s = Polynomial::variable("s");
    const Polynomial x = Rational(frac(1, 2)) * (2 - t);
    const Polynomial tau = Rational(frac(5, 4)) * (2 - t);
    const Polynomial first = Rational(frac(11, 4)) * (2 - t).pow(2) - s.pow(2) - 4 * s * (2 - t);
    const Polynomial second = Rational(frac(8, 3)) * (tau - s).pow(2);
    const Polynomial inner = first.integrate("s", Polynomial(0), x) + second.integrate("s", x, tau);
    return frac(3, 22) * inner.integrate(0, 2);
}

std::vector<Check> checks(const ThreefoldModel& quintic) {
    const Polynomial u = Polynomial::variable("u");
    const Polynomial t = Polynomial::variable("t");
    const std::string q_pieces = ((4 - 2 * u).pow(3) - 15 * (4 - 2 * u) * (1 - u).pow(2) + 18 * (1 - u).pow(3)).to_string() +
                                 "; " + (4 - 2 * u).pow(3).to_string();
    std::vector<Check> out;
    out.push_back({"1a", "vol(-K - u Qtilde) pieces on bl_p3_quintic", q_pieces,
                   "App. B: (4-2u)^3-15(4-2u)(1-u)^2+18(1-u)^3 ... (4-2u)^3",
                   [&] { return pieces(divisor_volume(quintic, "Qtilde", "u").volume); }});
    out.push_back({"1b", "S(Qtilde)", "19/22", "App. B: S_{Y_0}(Q~) = 19/22", [&] {
                       return str(stability::s_invariant(divisor_volume(quintic, "Qtilde", "u").volume, quintic.degree()));
                   }});
    out.push_back({"1c", "S(E)", "1/4", "App. B: S_{Y_0}(E) = 1/4", [&] {
                       return str(stability::s_invariant(divisor_volume(quintic, "E", "u").volume, quintic.degree()));
                   }});
    out.push_back({"1d", "beta(Qtilde) with A = 1", "3/22", "Thm-Def: K-semistable iff beta >= 0", [&] {
                       const Rational s = stability::s_invariant(divisor_volume(quintic, "Qtilde", "u").volume, quintic.degree());
                       return str(stability::beta("Qtilde", 1, s).beta);
                   }});
    out.push_back({"2a", "S(W^S, l2), Z = L on dp4", "53/88", "App. B: S(W^S_{.,.}, l_2) = 53/88",
                   [&] { return flag_value(quintic, "dp4", {1, 0, 0, 0, 0, 0}); }});
    out.push_back({"2b", "S(W^S, l1), Z = L - e1 - e2 on dp4", "29/44", "App. B: S(W^S_{.,.}, l_1) = 29/44",
                   [&] { return flag_value(quintic, "dp4", {1, -1, -1, 0, 0, 0}); }});
    out.push_back({"2b'", "printed l1 cell volumes integrated over the printed cells", "29/44",
                   "App. B: 11/4(2-t)^2-s^2-4s(2-t) ... 8/3(5(2-t)/4-s)^2", [] { return str(printed_l1_integral()); }});
    out.push_back({"2c", "S(W^Qtilde, Delta), Z = O(1,1) on the quadric", "1/2", "App. B: 3/22 (7/3 + 4/3) = 1/2",
                   [&] { return flag_value(quintic, "quadric", {1, 1}); }});
    out.push_back({"3a", "sing_line(12,0) volume pieces", "22 - 6*t^2 - 4*t^3; " + (12 * (2 - t).pow(3)).to_string(),
                   "§3: 22 - 6t^2 - 4t^3 and 12(2-t)^3", [] {
                       const auto m = intersect::sing_line_model(12, 0);
                       return pieces(divisor_volume(m, "E", "t").volume);
                   }});
    out.push_back({"3b", "one-sided derivatives at the wall", "t=1: -24, -36, equal=false", "§3: vol is not C^1 at t = 1",
                   [] {
                       const auto m = intersect::sing_line_model(12, 0);
                       const auto c = check_c1(divisor_volume(m, "E", "t").volume).at(0);
                       return "t=" + str(c.breakpoint) + ": " + str(c.left_derivative) + ", " + str(c.right_derivative) +
                              ", equal=" + str(c.equal);
                   }});
    out.push_back({"3c", "sing_line_bound(12, 0)", "1", "§3: S_X(E) >= 1 + (g-12+k)/(4(g-1))",
                   [] { return str(stability::sing_line_bound_assembled(12, 0)); }});
    out.push_back({"4a", "A_L for diag(22,-2)", "Z/2 + Z/22", "§4: discriminant group of <22> + <-2>", [] {
                       const auto g = lattice::discriminant_group(GramLattice{{22, 0}, {0, -2}});
                       std::vector<std::string> f;
                       for (const auto& d : g.factors) f.push_back("Z/" + str(d));
                       return join(f, " + ");
                   }});
    out.push_back({"4b", "nonzero isotropic elements of diag(22,-2)", "0", "§4: no nonzero isotropic element", [] {
                       return std::to_string(lattice::isotropic_elements(GramLattice{{22, 0}, {0, -2}}).size() - 1);
                   }});
    out.push_back({"4c", "primitivity forced for diag(22,-2)", "true", "§4: the embedding is primitive",
                   [] { return str(lattice::is_primitivity_forced(GramLattice{{22, 0}, {0, -2}})); }});
    const std::vector<std::pair<std::pair<long, long>, std::string>> types{
        {{11, 4}, "-33"}, {{9, 2}, "-37"}, {{6, 0}, "-36"}, {{5, 0}, "-25"}};
    for (const auto& [hm, det] : types) {
        const auto [h, m] = hm;
        const std::string name = *k3cat::type_of(h, m);
        out.push_back({"5" + name, "Type " + name + " Gram det and signature", det + " (1,1)",
                       "Type I-IV lattices [[22,h],[h,m]]", [h = h, m = m] {
                           const auto g = k3cat::nl_gram(k3cat::kDegree, h, m);
                           return str(lattice::determinant(g)) + " " + str(lattice::signature(g));
                       }});
    }
    out.push_back({"6a", "restriction Gram on bl_v4_conic", "[[22,14],[14,8]]", "App. A: H^2 = 22, H.L = 14, L^2 = 8", [] {
                       const auto s = intersect::restrict_to_surface(intersect::blowup_v4_conic(), {2, -1},
                                                                     {{"H", {2, -1}}, {"L", {1, 0}}});
                       return "[[" + str(s.gram(0, 0)) + "," + str(s.gram(0, 1)) + "],[" + str(s.gram(1, 0)) + "," +
                              str(s.gram(1, 1)) + "]]";
                   }});
    out.push_back({"6b", "solutions of -8a^2+28ab-22b^2+40 > 0, a in [1,100], b in [-100,-1]", "none",
                   "App. A: -8a^2+28ab-22b^2+40 > 0 has no solution", [] {
                       const auto r = lattice::integer_search_quadratic({-8, 28, -22, 0, 0, 40}, {{1, 100}, {-100, -1}});
                       return r.empty() ? std::string("none") : std::to_string(r.size()) + " solutions";
                   }});
    out.push_back({"6c", "solutions of -22+28c-8c^2 > 0, c in [-100,100]", "{2}", "App. A: c = 2", [] {
                       const auto r = lattice::integer_search_quadratic({-8, 0, 0, 28, 0, -22}, {{-100, 100}});
                       std::vector<std::string> v;
                       for (const auto& x : r) v.push_back(std::to_string(x[0]));
                       return "{" + join(v, ",") + "}";
                   }});
    out.push_back({"6d", "k3_section_count(8)", "6", "App. A: h^0 = 6",
                   [] { return std::to_string(k3cat::k3_section_count(8)); }});
    out.push_back({"7a", "prism anticanonical degree", "18", "§3 Example: toric Fano threefold of volume 18", [] {
                       const auto p = toric::LatticePolytope::from_integer(
                           {{1, 0, 1}, {1, 0, -1}, {0, 1, 1}, {0, 1, -1}, {-1, -1, 1}, {-1, -1, -1}});
                       return str(toric::anticanonical_degree(p));
                   }});
    out.push_back({"7b", "barycenter of the dual bipyramid", "(0, 0, 0)", "§3 Example: barycenter is the origin", [] {
                       const auto p = toric::LatticePolytope::from_integer(
                           {{1, 0, 1}, {1, 0, -1}, {0, 1, 1}, {0, 1, -1}, {-1, -1, 1}, {-1, -1, -1}});
                       return to_string(toric::toric_kps_check(p).barycenter);
                   }});
    return out;
}

}  // namespace

std::vector<CheckRow> verify_paper(const VerifyOptions& options) {
    const ThreefoldModel quintic = options.quintic ? *options.quintic : intersect::bl_p3_quintic();
    std::vector<CheckRow> rows;
    for (const auto& c : checks(quintic)) {
        CheckRow row{c.id, c.description, c.expected, "", false, c.anchor};
        try {
            row.computed = c.compute();
            row.pass = row.computed == row.expected;
        } catch (const Error& e) {
            row.computed = std::string("error: ") + e.what();
        } catch (const std::out_of_range& e) {
            row.computed = std::string("error: missing data: ") + e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace kstab::cli
