#include "kstab/intersect.hpp"

#include "kstab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace kstab::intersect {

namespace {

Vec unit(std::size_t n, std::size_t i) {
    Vec v = zero_vec(n);
    v[i] = 1;
    return v;
}

void check_size(const Vec& v, std::size_t n, const std::string& what) {
    if (v.size() != n) {
        throw DimensionMismatch(what + " has " + std::to_string(v.size()) + " entries, expected " +
                                std::to_string(n));
    }
}

}  // namespace

const Rational& ThreefoldModel::at(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t r = rank();
    return tensor.at((i * r + j) * r + k);
}

void ThreefoldModel::set(std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    const std::size_t r = rank();
    const std::size_t idx[3] = {i, j, k};
    std::size_t p[3] = {0, 1, 2};
    do {
        tensor.at((idx[p[0]] * r + idx[p[1]]) * r + idx[p[2]]) = v;
    } while (std::next_permutation(p, p + 3));
}

std::optional<NamedClass> ThreefoldModel::divisor(const std::string& label) const {
    for (const auto& d : divisors)
        if (d.label == label) return d;
    return std::nullopt;
}

Vec ThreefoldModel::class_of(const std::string& label) const {
    if (auto d = divisor(label)) return d->value;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == label) return unit(rank(), i);
    return parse_class(label, basis);
}

Rational ThreefoldModel::degree() const {
    return triple_product(*this, anticanonical, anticanonical, anticanonical);
}

ThreefoldModel empty_threefold(std::string name, std::vector<std::string> basis) {
    ThreefoldModel m;
    m.name = std::move(name);
    m.basis = std::move(basis);
    const std::size_t r = m.rank();
    m.tensor.assign(r * r * r, Rational(0));
    m.anticanonical = zero_vec(r);
    return m;
}

void validate(const ThreefoldModel& m) {
    const std::size_t r = m.rank();
    if (r == 0 || r > 4) throw DomainError("threefold basis must have 1 to 4 classes");
    if (m.tensor.size() != r * r * r) throw DimensionMismatch("intersection tensor size");
    std::set<std::string> seen(m.basis.begin(), m.basis.end());
    if (seen.size() != r) throw DomainError("duplicate basis label");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) {
                const Rational& v = m.at(i, j, k);
                if (v != m.at(j, i, k) || v != m.at(i, k, j) || v != m.at(k, j, i)) {
                    throw DomainError("intersection tensor is not symmetric");
                }
            }
    check_size(m.anticanonical, r, "anticanonical class");
    for (const auto& c : m.curves) check_size(c.value, r, "curve " + c.label);
    for (const auto& d : m.divisors) check_size(d.value, r, "divisor " + d.label);
    for (const auto& e : m.effective) {
        if (!m.divisor(e) && std::find(m.basis.begin(), m.basis.end(), e) == m.basis.end()) {
            throw DomainError("effective label " + e + " is not a declared divisor");
        }
    }
    for (const auto& [label, chambers] : m.chambers) {
        if (!m.divisor(label) && std::find(m.basis.begin(), m.basis.end(), label) == m.basis.end()) {
            throw DomainError("chambers for undeclared divisor " + label);
        }
        for (const auto& ch : chambers) {
            check_size(ch.base, r, "chamber class");
            check_size(ch.slope, r, "chamber class");
            if (!(ch.lo < ch.hi)) throw DomainError("empty chamber for " + label);
        }
    }
}

Rational triple_product(const ThreefoldModel& m, const Vec& a, const Vec& b, const Vec& c) {
    const std::size_t r = m.rank();
    check_size(a, r, "first class");
    check_size(b, r, "second class");
    check_size(c, r, "third class");
    Rational acc = 0;
    for (std::size_t i = 0; i < r; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < r; ++j) {
            if (b[j] == 0) continue;
            for (std::size_t k = 0; k < r; ++k) acc += a[i] * b[j] * c[k] * m.at(i, j, k);
        }
    }
    return acc;
}

Polynomial cube_polynomial(const ThreefoldModel& m, const Vec& base, const Vec& slope,
                           const std::string& var) {
    // Trilinear expansion: (b + t s)^3 = bbb + 3t bbs + 3t^2 bss + t^3 sss.
    const Polynomial t = Polynomial::variable(var);
    return Polynomial(triple_product(m, base, base, base)) +
           Rational(3 * triple_product(m, base, base, slope)) * t +
           Rational(3 * triple_product(m, base, slope, slope)) * t.pow(2) +
           triple_product(m, slope, slope, slope) * t.pow(3);
}

Rational pair_curve(const Vec& divisor, const Vec& curve) {
    check_size(curve, divisor.size(), "curve pairing");
    Rational acc = 0;
    for (std::size_t i = 0; i < divisor.size(); ++i) acc += divisor[i] * curve[i];
    return acc;
}

Rational SurfaceModel::pair(const Vec& a, const Vec& b) const {
    check_size(a, rank(), "surface class");
    check_size(b, rank(), "surface class");
    return bilinear(gram, a, b);
}

const std::vector<NamedClass>& SurfaceModel::effective_generators() const {
    return eff_cone.empty() ? negative_curves : eff_cone;
}

void validate(const SurfaceModel& s) {
    const std::size_t r = s.rank();
    if (r == 0) throw DomainError("surface basis is empty");
    if (s.gram.rows() != r || s.gram.cols() != r) throw DimensionMismatch("surface Gram size");
    if (!s.gram.is_symmetric()) throw DomainError("surface Gram is not symmetric");
    check_size(s.canonical, r, "canonical class");
    for (const auto& c : s.negative_curves) {
        check_size(c.value, r, "negative curve " + c.label);
        if (s.square(c.value) >= 0) {
            throw DomainError("negative curve " + c.label + " has square " + to_string(s.square(c.value)));
        }
    }
    for (const auto& c : s.eff_cone) check_size(c.value, r, "effective generator " + c.label);
    for (const auto& c : s.nef_witnesses) check_size(c.value, r, "nef witness " + c.label);
}

SurfaceModel restrict_to_surface(const ThreefoldModel& m, const Vec& surface,
                                 const std::vector<NamedClass>& restricted_basis) {
    check_size(surface, m.rank(), "surface class");
    SurfaceModel s;
    s.name = m.name + "|" + format_class(surface, m.basis);
    const std::size_t n = restricted_basis.size();
    s.gram = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        s.basis.push_back(restricted_basis[i].label);
        for (std::size_t j = 0; j < n; ++j) {
            s.gram(i, j) = triple_product(m, restricted_basis[i].value, restricted_basis[j].value, surface);
        }
    }
    s.canonical = zero_vec(n);
    return s;
}

Vec parse_class(const std::string& text, const std::vector<std::string>& labels) {
    std::string src;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) src += c;
    const auto fail = [&](const std::string& why) {
        return ParseError("class '" + text + "': " + why);
    };
    Vec v = zero_vec(labels.size());
    if (src == "0") return v;
    if (src.empty()) throw fail("empty");
    std::size_t pos = 0;
    bool first = true;
    while (pos < src.size()) {
        Rational sign = 1;
        if (src[pos] == '+' || src[pos] == '-') {
            if (src[pos] == '-') sign = -1;
            ++pos;
        } else if (!first) {
            throw fail("expected + or - at position " + std::to_string(pos));
        }
        first = false;
        Rational coeff = 1;
        if (pos < src.size() && src[pos] == '(') {
            const auto close = src.find(')', pos);
            if (close == std::string::npos) throw fail("unbalanced parenthesis");
            coeff = parse_rational(src.substr(pos + 1, close - pos - 1));
            pos = close + 1;
        } else {
            const std::size_t start = pos;
            while (pos < src.size() && (std::isdigit(static_cast<unsigned char>(src[pos])) || src[pos] == '/')) ++pos;
            if (pos > start) coeff = parse_rational(src.substr(start, pos - start));
        }
        if (pos < src.size() && src[pos] == '*') ++pos;
        const std::size_t start = pos;
        if (pos >= src.size() || !(std::isalpha(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
            throw fail("expected a class label at position " + std::to_string(pos));
        }
        while (pos < src.size() && (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) ++pos;
        const std::string label = src.substr(start, pos - start);
        const auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end()) throw fail("unknown label " + label);
        v[static_cast<std::size_t>(it - labels.begin())] += sign * coeff;
    }
    return v;
}

std::string format_class(const Vec& v, const std::vector<std::string>& labels) {
    check_size(v, labels.size(), "class");
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        const Rational mag = abs(v[i]);
        if (out.empty()) {
            if (v[i] < 0) out += "-";
        } else {
            out += v[i] < 0 ? " - " : " + ";
        }
        if (mag != 1) out += (mag.get_den() == 1 ? to_string(mag) : "(" + to_string(mag) + ")") + " ";
        out += labels[i];
    }
    return out.empty() ? "0" : out;
}

ThreefoldModel blowup_p3_curve(int degree, int genus) {
    if (degree < 1 || genus < 0) throw DomainError("need degree >= 1 and genus >= 0");
    ThreefoldModel m = empty_threefold("bl_p3_curve(" + std::to_string(degree) + "," +
                                           std::to_string(genus) + ")",
                                       {"H", "E"});
    m.set(0, 0, 0, 1);
    m.set(0, 0, 1, 0);
    m.set(0, 1, 1, -degree);
    m.set(1, 1, 1, -(4 * degree + 2 * genus - 2));
    m.anticanonical = {4, -1};
    m.curves = {{"line", {1, 0}}, {"fiber", {0, -1}}};
    m.divisors = {{"H", {1, 0}}, {"E", {0, 1}}};
    m.effective = {"E"};
    return m;
}

ThreefoldModel bl_p3_quintic() {
    ThreefoldModel m = blowup_p3_curve(5, 0);
    m.name = "bl_p3_quintic";
    // Rulings of the quadric through the (1,4) quintic: the strict transforms
    // meet E in 4 and 1 points.
    m.curves.push_back({"ruling4", {1, 4}});
    m.curves.push_back({"ruling1", {1, 1}});
    m.divisors.push_back({"Qtilde", {2, -1}});
    m.divisors.push_back({"S", {1, 0}});
    m.effective = {"E", "Qtilde"};
    m.chambers["E"] = {{0, 1, {4, -1}, {-4, 1}}};
    m.chambers["Qtilde"] = {{0, 1, {4, -1}, {-2, 1}}, {1, 2, {4, 0}, {-2, 0}}};
    m.chambers["S"] = {{0, 2, {4, -1}, {-2, frac(1, 2)}}};
    const Vec dp4_base{4, -1, -1, -1, -1, -1};
    const Rational h = frac(1, 2);
    m.flags.push_back({"S", "dp4", {{0, 2, dp4_base, {-2, h, h, h, h, h}}}});
    m.flags.push_back({"Qtilde", "quadric", {{0, 1, {3, 0}, {-1, 2}}, {1, 2, {4, 4}, {-2, -2}}}});
    validate(m);
    return m;
}

ThreefoldModel blowup_node(long volume) {
    if (volume <= 0 || volume % 2 != 0) throw DomainError("node blowup needs an even positive volume");
    ThreefoldModel m = empty_threefold(volume == 22 ? "bl_node_22" : "bl_node(" + std::to_string(volume) + ")",
                                       {"A", "E"});
    m.set(0, 0, 0, volume);
    m.set(1, 1, 1, 2);
    m.anticanonical = {1, -1};
    m.curves = {{"ruling", {0, -1}}};
    m.divisors = {{"A", {1, 0}}, {"E", {0, 1}}};
    m.effective = {"E"};
    validate(m);
    return m;
}

ThreefoldModel blowup_v4_conic() {
    ThreefoldModel m = empty_threefold("bl_v4_conic", {"L", "E"});
    m.set(0, 0, 0, 4);
    m.set(0, 1, 1, -2);
    m.set(1, 1, 1, -2);
    m.anticanonical = {2, -1};
    m.curves = {{"line", {1, 0}}, {"fiber", {0, -1}}};
    m.divisors = {{"L", {1, 0}}, {"E", {0, 1}}};
    m.effective = {"E"};
    validate(m);
    return m;
}

ThreefoldModel sing_line_model(int genus, int k) {
    if (genus < 3 || k < 0) throw DomainError("sing_line needs g >= 3 and k >= 0");
    ThreefoldModel m = empty_threefold(
        "sing_line(" + std::to_string(genus) + "," + std::to_string(k) + ")", {"A", "E"});
    m.set(0, 0, 0, 2 * genus - 2);
    m.set(0, 1, 1, -2);
    m.set(1, 1, 1, 4 - k);
    m.anticanonical = {1, 0};
    m.curves = {{"fiber", {0, -2}}, {"line", {1, 0}}, {"secant", {1, 1}}};
    m.divisors = {{"A", {1, 0}}, {"E", {0, 1}}, {"A2E", {1, -2}}};
    m.effective = {"E", "A2E"};
    m.chambers["E"] = {{0, 1, {1, 0}, {0, -1}}, {1, 2, {2, -2}, {-1, 1}, true}};
    validate(m);
    return m;
}

SurfaceModel dp4_surface() {
    SurfaceModel s;
    s.name = "dp4";
    s.basis = {"L", "e1", "e2", "e3", "e4", "e5"};
    s.gram = Matrix(6, 6);
    s.gram(0, 0) = 1;
    for (std::size_t i = 1; i < 6; ++i) s.gram(i, i) = -1;
    s.canonical = {-3, 1, 1, 1, 1, 1};
    for (std::size_t i = 1; i < 6; ++i) {
        Vec v = zero_vec(6);
        v[i] = 1;
        s.negative_curves.push_back({"e" + std::to_string(i), v});
    }
    for (std::size_t i = 1; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) {
            Vec v = zero_vec(6);
            v[0] = 1;
            v[i] = v[j] = -1;
            s.negative_curves.push_back({"l" + std::to_string(i) + std::to_string(j), v});
        }
    s.negative_curves.push_back({"conic", {2, -1, -1, -1, -1, -1}});
    // Conic-bundle classes are nef; any pseudo-effective class pairs >= 0.
    s.nef_witnesses.push_back({"L", {1, 0, 0, 0, 0, 0}});
    for (std::size_t i = 1; i < 6; ++i) {
        Vec v = zero_vec(6);
        v[0] = 1;
        v[i] = -1;
        s.nef_witnesses.push_back({"L-e" + std::to_string(i), v});
    }
    validate(s);
    return s;
}

SurfaceModel quadric_surface() {
    SurfaceModel s;
    s.name = "quadric";
    s.basis = {"f1", "f2"};
    s.gram = Matrix{{0, 1}, {1, 0}};
    s.canonical = {-2, -2};
    s.eff_cone = {{"f1", {1, 0}}, {"f2", {0, 1}}};
    s.nef_witnesses = s.eff_cone;
    validate(s);
    return s;
}

}  // namespace kstab::intersect
