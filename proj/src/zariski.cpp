#include "kstab/zariski.hpp"

#include "kstab/errors.hpp"

#include <algorithm>
#include <exception>
#include <functional>

namespace kstab::zariski {

using intersect::NamedClass;

namespace {

// A class or scalar that depends linearly on parameters (1, p1, p2, ...):
// parts[k] multiplies parameter k.
using Parts = std::vector<Vec>;
using Scalar = std::vector<Rational>;
using SignFn = std::function<int(const Scalar&)>;

struct Solution {
    std::vector<std::size_t> support;
    std::vector<Scalar> coefficients;  // one per support curve
    Parts positive;
    Matrix gram;
};

Scalar pairing(const SurfaceModel& s, const Parts& d, const Vec& c) {
    Scalar out;
    for (const auto& part : d) out.push_back(s.pair(part, c));
    return out;
}

Solution solve_on_support(const SurfaceModel& s, const Parts& d, std::vector<std::size_t> support) {
    const auto& curves = s.negative_curves;
    std::sort(support.begin(), support.end());
    const std::size_t n = support.size();
    Solution sol;
    sol.support = support;
    sol.gram = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            sol.gram(i, j) = s.pair(curves[support[i]].value, curves[support[j]].value);
    sol.positive = d;
    sol.coefficients.assign(n, Scalar(d.size(), Rational(0)));
    if (n == 0) return sol;
    if (!is_negative_definite(sol.gram)) {
        std::string labels;
        for (auto i : support) labels += (labels.empty() ? "" : ", ") + curves[i].label;
        throw IndefiniteSupport("support {" + labels + "} is not negative definite");
    }
    const Matrix inv = inverse(sol.gram);
    for (std::size_t k = 0; k < d.size(); ++k) {
        Vec rhs(n);
        for (std::size_t i = 0; i < n; ++i) rhs[i] = s.pair(d[k], curves[support[i]].value);
        const Vec x = inv * rhs;
        for (std::size_t i = 0; i < n; ++i) {
            sol.coefficients[i][k] = x[i];
            sol.positive[k] = sol.positive[k] - x[i] * curves[support[i]].value;
        }
    }
    return sol;
}

Solution fujita(const SurfaceModel& s, const Parts& d, const SignFn& sign) {
    std::vector<std::size_t> support;
    for (;;) {
        Solution sol = solve_on_support(s, d, support);
        bool grew = false;
        for (std::size_t c = 0; c < s.negative_curves.size(); ++c) {
            if (std::find(support.begin(), support.end(), c) != support.end()) continue;
            if (sign(pairing(s, sol.positive, s.negative_curves[c].value)) < 0) {
                support.push_back(c);
                grew = true;
            }
        }
        if (!grew) {
            for (std::size_t i = 0; i < sol.support.size(); ++i) {
                if (sign(sol.coefficients[i]) < 0) {
                    throw IndefiniteSupport("negative coefficient on " +
                                            s.negative_curves[sol.support[i]].label +
                                            "; the declared curve list looks incomplete");
                }
            }
            return sol;
        }
    }
}

/// Sign just to the right of x0 of q[0] + x q[1].
SignFn right_of(const Rational& x0) {
    return [x0](const Scalar& q) {
        const Rational v = q[0] + x0 * q[1];
        return v != 0 ? sign(v) : sign(q[1]);
    };
}

/// Sign of q[0] + t q[1] + s q[2] just to the right of s0 at t.
SignFn right_of_at(const Rational& t, const Rational& s0) {
    return [t, s0](const Scalar& q) {
        const Rational v = q[0] + t * q[1] + s0 * q[2];
        return v != 0 ? sign(v) : sign(q[2]);
    };
}

std::vector<std::string> support_labels(const SurfaceModel& s, const Solution& sol) {
    std::vector<std::string> out;
    for (auto i : sol.support) out.push_back(s.negative_curves[i].label);
    return out;
}

/// Constraints whose nonnegativity certifies a support: the coefficients of the
/// support curves and the pairings of P with every other declared curve.
std::vector<Scalar> constraints(const SurfaceModel& s, const Solution& sol) {
    std::vector<Scalar> out = sol.coefficients;
    for (std::size_t c = 0; c < s.negative_curves.size(); ++c) {
        if (std::find(sol.support.begin(), sol.support.end(), c) != sol.support.end()) continue;
        out.push_back(pairing(s, sol.positive, s.negative_curves[c].value));
    }
    return out;
}

bool in_cone(const std::vector<Vec>& generators, const Vec& target) {
    const std::size_t rows = target.size();
    const std::size_t cols = generators.size();
    if (cols == 0) return is_zero(target);
    Matrix a(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) a(i, j) = generators[j][i];
    return lp::maximize(a, target, zero_vec(cols)).status != lp::Status::infeasible;
}

Polynomial square_polynomial(const SurfaceModel& s, const Vec& base, const Vec& slope,
                             const std::string& var) {
    const Polynomial x = Polynomial::variable(var);
    return Polynomial(s.square(base)) + Rational(2 * s.pair(base, slope)) * x +
           Polynomial(s.square(slope)) * x.pow(2);
}

}  // namespace

bool is_pseudo_effective(const SurfaceModel& s, const Vec& d) {
    for (const auto& w : s.nef_witnesses)
        if (s.pair(d, w.value) < 0) return false;
    const auto& gens = s.effective_generators();
    if (gens.empty()) return true;
    std::vector<Vec> g;
    for (const auto& c : gens) g.push_back(c.value);
    return in_cone(g, d);
}

ZariskiResult zariski_decompose(const SurfaceModel& s, const Vec& d) {
    if (d.size() != s.rank()) throw DimensionMismatch("class size does not match surface rank");
    if (!is_pseudo_effective(s, d)) {
        throw NotPseudoEffective(intersect::format_class(d, s.basis) +
                                 " fails the nef-witness or effective-cone test");
    }
    const Solution sol = fujita(s, {d}, [](const Scalar& q) { return sign(q[0]); });
    ZariskiResult r;
    r.positive = sol.positive[0];
    r.negative_class = d - r.positive;
    for (std::size_t i = 0; i < sol.support.size(); ++i) {
        if (sol.coefficients[i][0] == 0) continue;
        r.negative.emplace_back(s.negative_curves[sol.support[i]].label, sol.coefficients[i][0]);
    }
    r.support_gram = sol.gram;
    r.volume = s.square(r.positive);
    return r;
}

Rational pseff_threshold(const SurfaceModel& s, const Vec& d, const Vec& z) {
    const auto& gens = s.effective_generators();
    if (gens.empty()) throw DomainError("surface " + s.name + " declares no effective generators");
    const std::size_t rows = s.rank();
    const std::size_t cols = gens.size() + 1;
    Matrix a(rows, cols);
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) a(i, j) = gens[j].value[i];
    for (std::size_t i = 0; i < rows; ++i) a(i, cols - 1) = z[i];
    Vec c = zero_vec(cols);
    c[cols - 1] = 1;
    const auto r = lp::maximize(a, d, c);
    if (r.status == lp::Status::infeasible) {
        throw NotPseudoEffective(intersect::format_class(d, s.basis) + " is outside the effective cone");
    }
    if (r.status == lp::Status::unbounded) {
        throw UnboundedDirection("d - s*(" + intersect::format_class(z, s.basis) +
                                 ") stays effective for all s");
    }
    return r.value;
}

VolumeFunction one_param_volume(const SurfaceModel& s, const Vec& base, const Vec& slope,
                                const Rational& lo, const Rational& hi, const std::string& var) {
    if (!(lo < hi)) throw DomainError("empty parameter interval");
    for (const Rational& x : {lo, hi}) {
        if (!is_pseudo_effective(s, base + x * slope)) {
            throw NotPseudoEffective("family is not pseudo-effective at " + var + " = " + to_string(x));
        }
    }
    std::vector<ChamberInfo> chambers;
    Rational x0 = lo;
    while (x0 < hi) {
        const Solution sol = fujita(s, {base, slope}, right_of(x0));
        Rational wall = hi;
        for (const auto& q : constraints(s, sol)) {
            if (q[1] >= 0) continue;
            const Rational root = -q[0] / q[1];
            if (root > x0 && root < wall) wall = root;
        }
        ChamberInfo info{x0, wall, sol.positive[0], sol.positive[1], support_labels(s, sol)};
        if (!chambers.empty() && chambers.back().support == info.support) {
            chambers.back().hi = wall;
        } else {
            chambers.push_back(std::move(info));
        }
        x0 = wall;
    }
    std::vector<Piece> pieces;
    for (const auto& ch : chambers) {
        std::string label = "support {";
        for (std::size_t i = 0; i < ch.support.size(); ++i) label += (i ? ", " : "") + ch.support[i];
        label += "}";
        pieces.push_back({ch.lo, ch.hi, square_polynomial(s, ch.positive_base, ch.positive_slope, var), label});
    }
    return VolumeFunction{PiecewisePolynomial(var, std::move(pieces)), std::move(chambers),
                          "Zariski chambers certified relative to the declared negative curves of " + s.name};
}

Rational FlagVolume::integral() const {
    Rational total = 0;
    for (const auto& ch : chambers) total += ch.integral;
    return total;
}

namespace {

constexpr int kMaxFlagDepth = 10;

struct FlagContext {
    const SurfaceModel& surf;
    Parts family;  // (const, t, s) parts of a_base + t a_slope - s z
    const Vec& a_base;
    const Vec& a_slope;
    const Vec& z;
};

Rational tau_at(const FlagContext& ctx, const Rational& t) {
    return pseff_threshold(ctx.surf, ctx.a_base + t * ctx.a_slope, ctx.z);
}

Rational eval(const Scalar& q, const Rational& t, const Rational& s) { return q[0] + t * q[1] + s * q[2]; }

/// s-root of q(t, s) = 0 as an affine function of t.
Polynomial wall_of(const Scalar& q) {
    return Polynomial::affine("t", -q[0] / q[2], -q[1] / q[2]);
}

struct Candidate {
    std::vector<Polynomial> walls;
    std::vector<Solution> cells;
};

Candidate sweep(const FlagContext& ctx, const Rational& t0, const Rational& t1) {
    const Rational tm = (t0 + t1) / 2;
    const Rational tau0 = tau_at(ctx, t0);
    const Rational tau1 = tau_at(ctx, t1);
    const Rational taum = tau_at(ctx, tm);
    Candidate out;
    if (2 * taum != tau0 + tau1) return out;  // tau bends inside: caller splits
    const Polynomial tau_line = Polynomial::affine("t", tau0 - t0 * (tau1 - tau0) / (t1 - t0),
                                                   (tau1 - tau0) / (t1 - t0));
    if (taum <= 0) throw NotPseudoEffective("no room below the threshold at t = " + to_string(tm));
    out.walls.push_back(Polynomial(0));
    Rational s0 = 0;
    while (s0 < taum) {
        Solution sol = fujita(ctx.surf, ctx.family, right_of_at(tm, s0));
        Rational next = taum;
        std::optional<Scalar> binding;
        for (const auto& q : constraints(ctx.surf, sol)) {
            if (q[2] >= 0) continue;
            const Rational root = -(q[0] + tm * q[1]) / q[2];
            if (root > s0 && root < next) {
                next = root;
                binding = q;
            }
        }
        out.walls.push_back(binding ? wall_of(*binding) : tau_line);
        out.cells.push_back(std::move(sol));
        s0 = next;
    }
    return out;
}

bool certify(const FlagContext& ctx, const Candidate& cand, const Rational& t0, const Rational& t1) {
    if (cand.cells.empty()) return false;
    for (std::size_t k = 0; k < cand.cells.size(); ++k) {
        const Polynomial& lower = cand.walls[k];
        const Polynomial& upper = cand.walls[k + 1];
        for (const Rational& t : {t0, t1})
            if (lower(t) > upper(t)) return false;
        for (const auto& q : constraints(ctx.surf, cand.cells[k])) {
            for (const Rational& t : {t0, t1}) {
                if (eval(q, t, lower(t)) < 0 || eval(q, t, upper(t)) < 0) return false;
            }
        }
    }
    return true;
}

std::vector<Rational> crossing_points(const Candidate& cand, const Rational& t0, const Rational& t1) {
    std::vector<Rational> out;
    for (std::size_t k = 0; k + 1 < cand.walls.size(); ++k) {
        const Polynomial diff = cand.walls[k + 1] - cand.walls[k];
        if (diff.is_constant()) continue;
        for (const auto& r : rational_roots_in_interval(diff, t0, t1))
            if (r > t0 && r < t1) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FlagChamber assemble(const FlagContext& ctx, const Candidate& cand, const Rational& t0,
                     const Rational& t1) {
    FlagChamber ch{t0, t1, cand.walls, {}, 0};
    const Polynomial t = Polynomial::variable("t");
    const Polynomial s = Polynomial::variable("s");
    for (std::size_t k = 0; k < cand.cells.size(); ++k) {
        const Solution& sol = cand.cells[k];
        FlagCell cell;
        cell.lower = cand.walls[k];
        cell.upper = cand.walls[k + 1];
        cell.support = support_labels(ctx.surf, sol);
        cell.p_const = sol.positive[0];
        cell.p_t = sol.positive[1];
        cell.p_s = sol.positive[2];
        const auto& surf = ctx.surf;
        const Vec& a = cell.p_const;
        const Vec& b = cell.p_t;
        const Vec& c = cell.p_s;
        cell.volume = Polynomial(surf.square(a)) + Rational(2 * surf.pair(a, b)) * t +
                      Rational(2 * surf.pair(a, c)) * s + Polynomial(surf.square(b)) * t * t +
                      Rational(2 * surf.pair(b, c)) * t * s + Polynomial(surf.square(c)) * s * s;
        ch.integral += cell.volume.integrate("s", cell.lower, cell.upper).integrate(t0, t1);
        ch.cells.push_back(std::move(cell));
    }
    return ch;
}

void flag_chambers(const FlagContext& ctx, const Rational& t0, const Rational& t1, int depth,
                   std::vector<FlagChamber>& out) {
    const Candidate cand = sweep(ctx, t0, t1);
    if (certify(ctx, cand, t0, t1)) {
        out.push_back(assemble(ctx, cand, t0, t1));
        return;
    }
    if (depth >= kMaxFlagDepth) {
        throw WallCrossingDegeneracy("could not certify a constant cell structure on [" +
                                     to_string(t0) + ", " + to_string(t1) + "]");
    }
    std::vector<Rational> cuts = crossing_points(cand, t0, t1);
    if (cuts.empty()) cuts.push_back((t0 + t1) / 2);
    Rational left = t0;
    for (const auto& c : cuts) {
        flag_chambers(ctx, left, c, depth + 1, out);
        left = c;
    }
    flag_chambers(ctx, left, t1, depth + 1, out);
}

}  // namespace

FlagVolume two_param_flag_volume(const SurfaceModel& surf, const Vec& a_base, const Vec& a_slope,
                                 const Rational& lo, const Rational& hi, const Vec& z) {
    if (!(lo < hi)) throw DomainError("empty t-interval");
    if (a_base.size() != surf.rank() || a_slope.size() != surf.rank() || z.size() != surf.rank()) {
        throw DimensionMismatch("flag classes do not match the surface rank");
    }
    const FlagContext ctx{surf, {a_base, a_slope, Rational(-1) * z}, a_base, a_slope, z};
    FlagVolume fv;
    flag_chambers(ctx, lo, hi, 0, fv.chambers);
    return fv;
}

VolumeFunction threefold_volume_certified(const ThreefoldModel& m, const Vec& direction,
                                          const std::vector<intersect::ChamberSpec>& chambers,
                                          const std::string& var) {
    if (chambers.empty()) throw DomainError("no chambers given");
    if (direction.size() != m.rank()) throw DimensionMismatch("direction class size");
    std::vector<Vec> effective;
    for (const auto& label : m.effective) effective.push_back(m.class_of(label));

    std::vector<ChamberInfo> infos;
    std::vector<Piece> pieces;
    bool any_lower = false;
    for (std::size_t c = 0; c < chambers.size(); ++c) {
        const auto& ch = chambers[c];
        if (c > 0 && ch.lo != chambers[c - 1].hi) {
            throw CertificateViolation("chambers do not abut at " + to_string(ch.lo));
        }
        const Vec n_base = m.anticanonical - ch.base;
        const Vec n_slope = Rational(-1) * direction - ch.slope;
        for (const Rational& t : {ch.lo, ch.hi}) {
            const Vec n = n_base + t * n_slope;
            if (!in_cone(effective, n)) {
                throw CertificateViolation("negative part " + intersect::format_class(n, m.basis) +
                                           " at " + var + " = " + to_string(t) +
                                           " is not a nonnegative combination of declared effective divisors");
            }
            const Vec p = ch.at(t);
            for (const auto& curve : m.curves) {
                if (intersect::pair_curve(p, curve.value) < 0) {
                    throw CertificateViolation("positive part pairs negatively with " + curve.label +
                                               " at " + var + " = " + to_string(t));
                }
            }
        }
        Polynomial piece = intersect::cube_polynomial(m, ch.base, ch.slope, var);
        if (!pieces.empty() && pieces.back().poly(ch.lo) != piece(ch.lo)) {
            throw CertificateViolation("volume jumps at " + var + " = " + to_string(ch.lo));
        }
        std::vector<std::string> support;
        const Vec n_mid = n_base + ((ch.lo + ch.hi) / 2) * n_slope;
        for (std::size_t j = 0; j < effective.size(); ++j) {
            std::vector<Vec> others;
            for (std::size_t k = 0; k < effective.size(); ++k)
                if (k != j) others.push_back(effective[k]);
            if (!in_cone(others, n_mid)) support.push_back(m.effective[j]);
        }
        any_lower = any_lower || ch.lower_bound;
        infos.push_back({ch.lo, ch.hi, ch.base, ch.slope, support, ch.lower_bound});
        pieces.push_back({ch.lo, ch.hi, std::move(piece), ch.lower_bound ? "lower bound" : ""});
    }
    std::string cert = "certified relative to declared curves and effective divisors of " + m.name;
    if (any_lower) cert += "; chambers marked lower bound give P^3 <= vol";
    return VolumeFunction{PiecewisePolynomial(var, std::move(pieces)), std::move(infos), cert};
}

}  // namespace kstab::zariski

namespace kstab::zariski {

std::vector<ZariskiResult> zariski_decompose_batch(const SurfaceModel& s, const std::vector<Vec>& classes) {
    const auto n = static_cast<std::int64_t>(classes.size());
    std::vector<ZariskiResult> out(classes.size());
    std::vector<std::exception_ptr> errors(classes.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            out[i] = zariski_decompose(s, classes[i]);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::vector<ZariskiResult> zariski_decompose_batch_serial(const SurfaceModel& s, const std::vector<Vec>& classes) {
    std::vector<ZariskiResult> out;
    out.reserve(classes.size());
    for (const auto& d : classes) out.push_back(zariski_decompose(s, d));
    return out;
}

}  // namespace kstab::zariski
