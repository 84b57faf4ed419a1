#include "cli.hpp"

#include "model_file.hpp"
#include "presets.hpp"
#include "verify.hpp"

#include "kstab/errors.hpp"
#include "kstab/k3cat.hpp"
#include "kstab/lattice.hpp"
#include "kstab/stability.hpp"
#include "kstab/toric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

namespace kstab::cli {

namespace {

using json = nlohmann::ordered_json;
using intersect::format_class;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json_output = false;
    bool approx = false;
};

// ---- value parsing -------------------------------------------------------

Rational arg_rational(const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const ParseError& e) {
        throw UsageError(std::string("bad rational: ") + e.what());
    }
}

std::vector<std::vector<Integer>> arg_rows(const std::string& text, const std::string& what) {
    std::vector<std::vector<Integer>> rows;
    std::stringstream all(text);
    for (std::string row; std::getline(all, row, ';');) {
        std::istringstream in(row);
        std::vector<Integer> r;
        for (std::string w; in >> w;) {
            try {
                r.emplace_back(w);
            } catch (const std::invalid_argument&) {
                throw UsageError("bad integer '" + w + "' in " + what);
            }
        }
        if (r.empty()) throw UsageError("empty row in " + what);
        rows.push_back(r);
    }
    if (rows.empty()) throw UsageError("empty " + what);
    for (const auto& r : rows)
        if (r.size() != rows[0].size()) throw UsageError("ragged rows in " + what);
    return rows;
}

IntMatrix arg_gram(const std::string& text) {
    const auto rows = arg_rows(text, "--gram");
    IntMatrix g(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) g(i, j) = rows[i][j];
    return g;
}

std::int64_t arg_int64(const Integer& z) {
    if (!z.fits_slong_p()) throw UsageError("integer out of range: " + to_string(z));
    return z.get_si();
}

// ---- report helpers ------------------------------------------------------

void exact(json& j, const std::string& key, const Rational& q, const Options& o) {
    j[key] = to_string(q);
    if (o.approx) j[key + "_approx"] = to_double(q);
}

json vec_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

json matrix_json(const Matrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec_json(m.row(i)));
    return a;
}

json int_matrix_json(const IntMatrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_string(m(i, j)));
        a.push_back(r);
    }
    return a;
}

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

bool is_flat(const json& v) {
    if (!v.is_array()) return !v.is_object();
    for (const auto& x : v)
        if (x.is_object() || (x.is_array() && !is_flat(x))) return false;
    return true;
}

std::string flat_text(const json& v) {
    if (!v.is_array()) return scalar_text(v);
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + flat_text(v[i]);
    return s + "]";
}

void render_text(const json& j, std::ostream& out, int indent) {
    std::size_t width = 0;
    for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [k, v] : j.items()) {
        if (is_flat(v)) {
            out << pad << std::left << std::setw(static_cast<int>(width)) << k << "  " << flat_text(v) << "\n";
        } else if (v.is_object()) {
            out << pad << k << "\n";
            render_text(v, out, indent + 2);
        } else {
            out << pad << k << "\n";
            for (const auto& x : v) {
                if (x.is_object()) {
                    out << pad << "  -\n";
                    render_text(x, out, indent + 4);
                } else {
                    out << pad << "  - " << flat_text(x) << "\n";
                }
            }
        }
    }
}

void emit(const json& report, const Options& o, std::ostream& out) {
    if (o.json_output) {
        out << report.dump(2) << "\n";
    } else {
        render_text(report, out, 0);
    }
}

json cite(std::initializer_list<const char*> anchors) {
    json a = json::array();
    for (const char* s : anchors) a.push_back(s);
    return a;
}

// ---- commands ------------------------------------------------------------

json cmd_sinv(const std::string& model, const std::string& divisor, const std::string& a_text, const Options& o) {
    const auto m = as_threefold(resolve_model(model));
    const auto it = m.chambers.find(divisor);
    if (it == m.chambers.end()) throw DomainError("model " + m.name + " declares no chambers for " + divisor);
    const Rational a = arg_rational(a_text);
    const auto vol = zariski::threefold_volume_certified(m, m.class_of(divisor), it->second);
    const Rational s = stability::s_invariant(vol.volume, m.degree());
    const auto verdict = stability::beta(divisor, a, s);
    bool lower = false;
    json chambers = json::array();
    for (std::size_t i = 0; i < vol.volume.pieces().size(); ++i) {
        const auto& p = vol.volume.pieces()[i];
        const auto& info = vol.chambers.at(i);
        lower = lower || info.lower_bound;
        json c;
        c["interval"] = {to_string(p.lo), to_string(p.hi)};
        c["piece"] = p.poly.to_string();
        c["positive_part"] = format_class(info.positive_base, m.basis) + " + t (" +
                             format_class(info.positive_slope, m.basis) + ")";
        c["negative_support"] = info.support;
        c["kind"] = info.lower_bound ? "lower bound for vol" : "exact";
        chambers.push_back(c);
    }
    json r;
    r["command"] = "sinv";
    r["model"] = m.name;
    r["divisor"] = divisor;
    exact(r, "A", a, o);
    exact(r, "S", s, o);
    exact(r, "beta", verdict.beta, o);
    r["S_kind"] = lower ? "lower bound" : "exact";
    r["chambers"] = chambers;
    if (lower && verdict.beta >= 0) {
        r["verdict"] = "inconclusive (S is only bounded below)";
    } else {
        r["verdict"] = stability::to_string(verdict.verdict);
    }
    r["scope"] = "divisorial check for the tested divisor only";
    r["certification"] = vol.certification;
    r["citations"] = cite({"§2 Def: S-invariant S = (1/V) int_0^infty vol(-K - tE) dt",
                           "§2 Thm-Def: K-semistable iff beta >= 0 for every prime divisor over X"});
    return r;
}

json cmd_flag_sinv(const std::string& model, const std::string& surface, const std::string& curve,
                   const Options& o) {
    const auto m = as_threefold(resolve_model(model));
    const intersect::FlagSpec* flag = nullptr;
    for (const auto& f : m.flags)
        if (f.label == surface || f.surface == surface) flag = &f;
    if (!flag) throw DomainError("model " + m.name + " declares no flag on " + surface);
    const auto s = as_surface(preset(flag->surface));
    const Vec z = intersect::parse_class(curve, s.basis);
    const auto rep = stability::refined_s_flag(s, flag->chambers, z, m.degree());
    json r;
    r["command"] = "flag-sinv";
    r["model"] = m.name;
    r["divisor"] = flag->label;
    r["surface"] = rep.surface;
    r["curve"] = rep.curve;
    exact(r, "V", m.degree(), o);
    exact(r, "prefactor", rep.prefactor, o);
    exact(r, "value", rep.value, o);
    r["correction"] = rep.correction;
    json chambers = json::array();
    for (const auto& fv : rep.pieces)
        for (const auto& ch : fv.chambers) {
            json c;
            c["t_interval"] = {to_string(ch.lo), to_string(ch.hi)};
            json walls = json::array();
            for (const auto& w : ch.walls) walls.push_back(w.to_string());
            c["s_walls"] = walls;
            json cells = json::array();
            for (const auto& cell : ch.cells) {
                json x;
                x["s_range"] = {cell.lower.to_string(), cell.upper.to_string()};
                x["volume"] = cell.volume.to_string();
                x["negative_support"] = cell.support;
                cells.push_back(x);
            }
            c["cells"] = cells;
            c["integral"] = to_string(ch.integral);
            chambers.push_back(c);
        }
    r["chambers"] = chambers;
    r["citations"] = cite({"App. B: S(W^S_{.,.}, l) = 3/22 int_0^2 dt ( ... )",
                           "prefactor n/V with n = 3; correction zero since Z is not contained in N"});
    return r;
}

json cmd_zariski(const std::string& model, const std::string& cls, const Options& o) {
    const auto s = as_surface(resolve_model(model));
    const Vec d = intersect::parse_class(cls, s.basis);
    const auto z = zariski::zariski_decompose(s, d);
    json r;
    r["command"] = "zariski";
    r["model"] = s.name;
    r["class"] = format_class(d, s.basis);
    r["P"] = format_class(z.positive, s.basis);
    json n = json::array();
    std::vector<std::string> support;
    for (const auto& [label, coeff] : z.negative) {
        n.push_back({{"curve", label}, {"coefficient", to_string(coeff)}});
        support.push_back(label);
    }
    r["N"] = n;
    r["N_class"] = format_class(z.negative_class, s.basis);
    exact(r, "vol", z.volume, o);
    r["support"] = support;
    r["support_gram"] = matrix_json(z.support_gram);
    r["certificate"] = "relative to the declared negative curves: P.C = 0 on the support, P.C >= 0 on every "
                       "listed curve, support Gram negative definite";
    r["citations"] = cite({"App. B: positive part P(s,t) of the Zariski decomposition"});
    return r;
}

json lattice_header(const lattice::GramLattice& l) {
    json r;
    r["gram"] = int_matrix_json(l.gram());
    r["det"] = to_string(lattice::determinant(l));
    const auto sig = lattice::signature(l);
    r["signature"] = {sig.positive, sig.negative};
    r["even"] = l.is_even();
    return r;
}

json cmd_disc(const std::string& gram) {
    const lattice::GramLattice l(arg_gram(gram));
    const auto g = lattice::discriminant_group(l);
    json r;
    r["command"] = "lattice disc";
    r.update(lattice_header(l));
    json factors = json::array();
    for (const auto& f : g.factors) factors.push_back(to_string(f));
    r["factors"] = factors;
    r["order"] = to_string(g.order());
    json gens = json::array();
    for (const auto& v : g.generators) {
        json x;
        x["element"] = vec_json(v);
        if (l.is_even()) x["q"] = to_string(lattice::discriminant_quadratic(l, v));
        x["b"] = to_string(lattice::discriminant_bilinear(l, v, v));
        gens.push_back(x);
    }
    r["generators"] = gens;
    r["citations"] = cite({"§4: discriminant group A_L = L^dual / L with its quadratic form"});
    return r;
}

json cmd_overlattices(const std::string& gram) {
    const lattice::GramLattice l(arg_gram(gram));
    const auto ovs = lattice::even_overlattices(l, lattice::enumeration_bound_from_env());
    json r;
    r["command"] = "lattice overlattices";
    r.update(lattice_header(l));
    json list = json::array();
    for (const auto& ov : ovs) {
        json x;
        x["subgroup_order"] = ov.subgroup.size();
        x["det"] = to_string(lattice::determinant(ov.lattice));
        x["gram"] = int_matrix_json(ov.lattice.gram());
        x["basis"] = matrix_json(ov.basis);
        list.push_back(x);
    }
    r["overlattices"] = list;
    r["citations"] = cite({"§4: even overlattices correspond to isotropic subgroups of A_L"});
    return r;
}

json cmd_primitive(const std::string& gram) {
    const lattice::GramLattice l(arg_gram(gram));
    const auto bound = lattice::enumeration_bound_from_env();
    const auto iso = lattice::isotropic_elements(l, bound);
    json r;
    r["command"] = "lattice primitive";
    r.update(lattice_header(l));
    r["forced"] = lattice::is_primitivity_forced(l, bound);
    json nz = json::array();
    for (const auto& v : iso)
        if (!is_zero(v)) nz.push_back(vec_json(v));
    r["isotropic_nonzero"] = nz;
    r["citations"] = cite({"§4: A_L has no nonzero isotropic element, so the embedding is primitive"});
    return r;
}

json cmd_saturate(const std::string& gram, const std::string& sub) {
    const lattice::GramLattice l(arg_gram(gram));
    std::vector<IntVec> basis;
    for (const auto& row : arg_rows(sub, "--sub")) basis.push_back(row);
    json r;
    r["command"] = "lattice saturate";
    r.update(lattice_header(l));
    r["sublattice"] = basis.size();
    r["saturated"] = lattice::is_saturated(l, basis);
    r["citations"] = cite({"§4: the Type I sublattice is saturated"});
    return r;
}

lattice::Comparison arg_comparison(const std::string& s) {
    if (s == "<") return lattice::Comparison::less;
    if (s == "<=") return lattice::Comparison::less_equal;
    if (s == "=" || s == "==") return lattice::Comparison::equal;
    if (s == ">=") return lattice::Comparison::greater_equal;
    if (s == ">") return lattice::Comparison::greater;
    throw UsageError("bad comparison '" + s + "'");
}

json cmd_search(const std::string& coeffs, const std::string& cmp, const std::string& box_text) {
    const auto c = arg_rows(coeffs, "--coeffs");
    if (c.size() != 1 || c[0].size() != 6) throw UsageError("--coeffs takes six integers: aa ab bb a b 1");
    lattice::QuadraticCondition q{arg_int64(c[0][0]), arg_int64(c[0][1]), arg_int64(c[0][2]),
                                  arg_int64(c[0][3]), arg_int64(c[0][4]), arg_int64(c[0][5]), arg_comparison(cmp)};
    lattice::Box box;
    for (const auto& row : arg_rows(box_text, "--box")) {
        if (row.size() != 2) throw UsageError("each --box range is 'lo hi'");
        box.emplace_back(arg_int64(row[0]), arg_int64(row[1]));
    }
    const auto sols = lattice::integer_search_quadratic(q, box);
    json r;
    r["command"] = "lattice search";
    json b = json::array();
    for (const auto& [lo, hi] : box) b.push_back({lo, hi});
    r["box"] = b;
    r["count"] = sols.size();
    r["solutions"] = sols;
    r["scope"] = "verified within the box only";
    r["citations"] = cite({"App. A: integer solutions of the intersection inequalities"});
    return r;
}

json cmd_nl(long h, long m, long d) {
    const auto rec = k3cat::nl_record(d, h, m);
    json r;
    r["command"] = "nl classify";
    r["name"] = rec.name;
    r.update(lattice_header(rec.gram));
    r["bn_excluding"] = d == k3cat::kDegree && k3cat::is_bn_excluding(h, m);
    const auto type = d == k3cat::kDegree ? k3cat::type_of(h, m) : std::nullopt;
    r["type"] = type ? json(*type) : json(nullptr);
    json tags = json::array();
    if (d == k3cat::kDegree)
        for (const auto& e : k3cat::catalog())
            if (e.record.h == h && e.record.m == m)
                for (auto t : e.tags) tags.push_back(k3cat::to_string(t));
    r["catalog_tags"] = tags;
    r["citations"] = cite({"§4: Noether-Lefschetz divisors D^22_{h,m} with Gram [[22,h],[h,m]]"});
    return r;
}

json cmd_toric(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::vector<IntVec> pts;
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
        const auto hash = line.find('#');
        std::istringstream ls(hash == std::string::npos ? line : line.substr(0, hash));
        IntVec p;
        for (std::string w; ls >> w;) {
            try {
                p.emplace_back(w);
            } catch (const std::invalid_argument&) {
                throw ParseError(path + ":" + std::to_string(n) + ": bad integer '" + w + "'");
            }
        }
        if (p.empty()) continue;
        if (p.size() != 3) throw ParseError(path + ":" + std::to_string(n) + ": expected three integers");
        pts.push_back(p);
    }
    const toric::LatticePolytope poly = toric::LatticePolytope::from_integer(pts);
    const auto dual = toric::polar_dual(poly);
    const bool reflexive = toric::is_reflexive(poly);
    json r;
    r["command"] = "toric check";
    json verts = json::array();
    for (const auto& v : poly.vertices()) verts.push_back(vec_json(v));
    r["vertices"] = verts;
    r["reflexive"] = reflexive;
    r["volume"] = to_string(toric::volume(poly));
    r["dual_volume"] = to_string(toric::volume(dual));
    if (reflexive) {
        const auto k = toric::toric_kps_check(poly);
        r["degree"] = to_string(toric::anticanonical_degree(poly));
        r["barycenter"] = vec_json(k.barycenter);
        r["kps"] = k.polystable;
        r["criterion"] = k.polystable ? "K-polystable by the toric criterion (Futaki invariant vanishes)"
                                      : "not K-polystable: barycenter of the dual polytope is nonzero";
    } else {
        r["degree"] = nullptr;
        r["barycenter"] = vec_json(toric::barycenter(dual));
        r["kps"] = nullptr;
    }
    r["citations"] = cite({"§3 Example: X_0 is K-polystable since the barycenter of the weight polytope is the origin"});
    return r;
}

json cmd_models() {
    json r;
    r["command"] = "models list";
    r["models"] = preset_names();
    return r;
}

int cmd_verify(const std::string& model_path, const Options& o, std::ostream& out) {
    VerifyOptions vo;
    if (!model_path.empty()) vo.quintic = as_threefold(resolve_model(model_path));
    const auto rows = verify_paper(vo);
    std::size_t passed = 0;
    for (const auto& row : rows) passed += row.pass;
    if (o.json_output) {
        json r;
        r["command"] = "verify-paper";
        json list = json::array();
        for (const auto& row : rows)
            list.push_back({{"id", row.id},
                            {"check", row.description},
                            {"expected", row.expected},
                            {"computed", row.computed},
                            {"status", row.pass ? "PASS" : "FAIL"},
                            {"anchor", row.anchor}});
        r["rows"] = list;
        r["passed"] = passed;
        r["total"] = rows.size();
        out << r.dump(2) << "\n";
    } else {
        std::size_t wid = 2, wdesc = 5, wexp = 8;
        for (const auto& row : rows) {
            wid = std::max(wid, row.id.size());
            wdesc = std::max(wdesc, row.description.size());
            wexp = std::max(wexp, row.expected.size());
        }
        auto line = [&](const std::string& st, const std::string& id, const std::string& d, const std::string& e,
                        const std::string& c) {
            out << std::left << std::setw(4) << st << "  " << std::setw(static_cast<int>(wid)) << id << "  "
                << std::setw(static_cast<int>(wdesc)) << d << "  " << std::setw(static_cast<int>(wexp)) << e << "  "
                << c << "\n";
        };
        line("", "id", "check", "expected", "computed");
        for (const auto& row : rows) line(row.pass ? "PASS" : "FAIL", row.id, row.description, row.expected, row.computed);
        out << passed << "/" << rows.size() << " checks passed\n";
    }
    return passed == rows.size() ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact K-stability invariants, lattices and toric checks", "kstab"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json_output, "Machine-readable JSON output");
    app.add_flag("--approx", o.approx, "Add decimal approximations next to exact values");

    std::function<json()> action;
    std::function<int()> raw_action;

    std::string model, divisor, a_text = "1", surface, curve, cls, gram, sub, coeffs, cmp = ">", box, vertices;
    long h = 0, m = 0, degree = k3cat::kDegree;

    auto* sinv = app.add_subcommand("sinv", "S- and beta-invariants of a divisor from certified chambers");
    sinv->add_option("--model", model, "Preset name or model file")->required();
    sinv->add_option("--divisor", divisor, "Divisor label")->required();
    sinv->add_option("--A", a_text, "Log discrepancy (p/q)");
    sinv->callback([&] { action = [&] { return cmd_sinv(model, divisor, a_text, o); }; });

    auto* flag = app.add_subcommand("flag-sinv", "Refined invariant S(W^S, Z) over a flag surface");
    flag->add_option("--model", model, "Preset name or model file")->required();
    flag->add_option("--surface", surface, "Flag label or surface preset")->required();
    flag->add_option("--curve", curve, "Curve class on the surface")->required();
    flag->callback([&] { action = [&] { return cmd_flag_sinv(model, surface, curve, o); }; });

    auto* zar = app.add_subcommand("zariski", "Zariski decomposition on a surface model");
    zar->add_option("--model", model, "Surface preset or model file")->required();
    zar->add_option("--class", cls, "Divisor class, e.g. \"9/4 L - e1\"")->required();
    zar->callback([&] { action = [&] { return cmd_zariski(model, cls, o); }; });

    auto* lat = app.add_subcommand("lattice", "Lattice computations");
    lat->require_subcommand(1, 1);
    auto* disc = lat->add_subcommand("disc", "Discriminant group");
    disc->add_option("--gram", gram, "Gram rows separated by ';'")->required();
    disc->callback([&] { action = [&] { return cmd_disc(gram); }; });
    auto* ovl = lat->add_subcommand("overlattices", "Even overlattices");
    ovl->add_option("--gram", gram, "Gram rows separated by ';'")->required();
    ovl->callback([&] { action = [&] { return cmd_overlattices(gram); }; });
    auto* prim = lat->add_subcommand("primitive", "Whether every even embedding is primitive");
    prim->add_option("--gram", gram, "Gram rows separated by ';'")->required();
    prim->callback([&] { action = [&] { return cmd_primitive(gram); }; });
    auto* sat = lat->add_subcommand("saturate", "Saturation of a sublattice");
    sat->add_option("--gram", gram, "Gram rows separated by ';'")->required();
    sat->add_option("--sub", sub, "Sublattice basis rows separated by ';'")->required();
    sat->callback([&] { action = [&] { return cmd_saturate(gram, sub); }; });
    auto* search = lat->add_subcommand("search", "Integer points satisfying a quadratic inequality");
    search->add_option("--coeffs", coeffs, "aa ab bb a b 1")->required();
    search->add_option("--cmp", cmp, "One of < <= = >= >");
    search->add_option("--box", box, "lo hi[; lo hi]")->required();
    search->callback([&] { action = [&] { return cmd_search(coeffs, cmp, box); }; });

    auto* nl = app.add_subcommand("nl", "Noether-Lefschetz catalog");
    nl->require_subcommand(1, 1);
    auto* classify = nl->add_subcommand("classify", "Classify a pair (h, m)");
    classify->set_help_flag("--help", "Print this help message and exit");
    classify->add_option("--h", h)->required();
    classify->add_option("--m", m)->required();
    classify->add_option("--degree", degree, "Polarization degree");
    classify->callback([&] { action = [&] { return cmd_nl(h, m, degree); }; });

    auto* tor = app.add_subcommand("toric", "Toric Fano threefolds");
    tor->require_subcommand(1, 1);
    auto* check = tor->add_subcommand("check", "Reflexivity, degree and barycenter criterion");
    check->add_option("--vertices", vertices, "File with one integer 3-vector per line")->required();
    check->callback([&] { action = [&] { return cmd_toric(vertices); }; });

    auto* models = app.add_subcommand("models", "Preset registry");
    models->require_subcommand(1, 1);
    models->add_subcommand("list", "List preset names")->callback([&] { action = [&] { return cmd_models(); }; });

    auto* verify = app.add_subcommand("verify-paper", "Golden suite of printed computations");
    std::string verify_model;
    verify->add_option("--model", verify_model, "Model file replacing bl_p3_quintic");
    verify->callback([&] { raw_action = [&] { return cmd_verify(verify_model, o, out); }; });

    std::vector<const char*> argv{"kstab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        if (raw_action) return raw_action();
        emit(action(), o, out);
        return kExitOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        if (o.json_output) {
            err << json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
        } else {
            err << "error: " << e.what() << "\n";
        }
        return kExitError;
    }
}

}  // namespace kstab::cli
