#include "model_file.hpp"

#include "kstab/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace kstab::cli {

using intersect::ChamberSpec;
using intersect::FlagSpec;
using intersect::NamedClass;
using intersect::SurfaceModel;
using intersect::ThreefoldModel;

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

struct Line {
    std::size_t number;
    std::string text;
};

[[noreturn]] void fail(const Line& l, const std::string& msg) {
    throw ParseError("line " + std::to_string(l.number) + ": " + msg);
}

Rational rational_at(const Line& l, const std::string& w) {
    try {
        return parse_rational(w);
    } catch (const ParseError& e) {
        fail(l, e.what());
    }
}

Vec vector_at(const Line& l, const std::string& text, std::size_t size) {
    Vec v;
    for (const auto& w : words(text)) v.push_back(rational_at(l, w));
    if (v.size() != size) {
        fail(l, "expected " + std::to_string(size) + " entries, got " + std::to_string(v.size()));
    }
    return v;
}

NamedClass named_at(const Line& l, std::size_t size) {
    const auto colon = l.text.find(':');
    if (colon == std::string::npos) fail(l, "expected 'label: entries'");
    const std::string label = trim(l.text.substr(0, colon));
    if (label.empty() || words(label).size() != 1) fail(l, "bad label '" + label + "'");
    return NamedClass{label, vector_at(l, l.text.substr(colon + 1), size)};
}

// "lo hi [lower] : base | slope"
ChamberSpec chamber_at(const Line& l, const std::string& interval, const std::string& classes,
                       std::size_t size) {
    auto iw = words(interval);
    ChamberSpec c;
    if (!iw.empty() && iw.back() == "lower") {
        c.lower_bound = true;
        iw.pop_back();
    }
    if (iw.size() != 2) fail(l, "expected 'lo hi' interval");
    c.lo = rational_at(l, iw[0]);
    c.hi = rational_at(l, iw[1]);
    const auto parts = split(classes, '|');
    if (parts.size() != 2) fail(l, "expected 'base | slope'");
    c.base = vector_at(l, parts[0], size);
    c.slope = vector_at(l, parts[1], size);
    return c;
}

std::string join(const Vec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + to_string(v[i]);
    return out;
}

std::string chamber_text(const ChamberSpec& c) {
    return to_string(c.lo) + " " + to_string(c.hi) + (c.lower_bound ? " lower" : "") + " : " + join(c.base) +
           " | " + join(c.slope);
}

const std::vector<std::string> kThreefoldSections{"basis", "triple", "anticanonical", "curves", "divisors",
                                                  "effective", "chambers", "flags"};
const std::vector<std::string> kSurfaceSections{"basis", "gram", "canonical", "negative_curves", "eff_cone",
                                                "nef_witnesses"};

ThreefoldModel build_threefold(const std::string& name, std::map<std::string, std::vector<Line>>& sec) {
    if (sec["basis"].size() != 1) throw ParseError("[basis] must be a single line of labels");
    ThreefoldModel m = intersect::empty_threefold(name, words(sec["basis"][0].text));
    const std::size_t r = m.rank();
    for (const auto& l : sec["triple"]) {
        const auto parts = split(l.text, '=');
        if (parts.size() != 2) fail(l, "expected 'i j k = value'");
        const auto idx = words(parts[0]);
        if (idx.size() != 3) fail(l, "expected three indices");
        std::size_t ijk[3];
        for (int a = 0; a < 3; ++a) {
            try {
                ijk[a] = std::stoul(idx[a]);
            } catch (const std::exception&) {
                fail(l, "bad index '" + idx[a] + "'");
            }
            if (ijk[a] >= r) fail(l, "index out of range");
        }
        m.set(ijk[0], ijk[1], ijk[2], rational_at(l, parts[1]));
    }
    if (sec["anticanonical"].size() != 1) throw ParseError("[anticanonical] must be a single line");
    m.anticanonical = vector_at(sec["anticanonical"][0], sec["anticanonical"][0].text, r);
    for (const auto& l : sec["curves"]) m.curves.push_back(named_at(l, r));
    for (const auto& l : sec["divisors"]) m.divisors.push_back(named_at(l, r));
    for (const auto& l : sec["effective"])
        for (const auto& w : words(l.text)) m.effective.push_back(w);
    for (const auto& l : sec["chambers"]) {
        const auto parts = split(l.text, ':');
        if (parts.size() != 3) fail(l, "expected 'divisor: lo hi : base | slope'");
        m.chambers[parts[0]].push_back(chamber_at(l, parts[1], parts[2], r));
    }
    for (const auto& l : sec["flags"]) {
        const auto parts = split(l.text, ':');
        if (parts.size() != 4) fail(l, "expected 'divisor: surface : lo hi : base | slope'");
        const auto base_words = words(split(parts[3], '|')[0]);
        const ChamberSpec c = chamber_at(l, parts[2], parts[3], base_words.size());
        auto it = std::find_if(m.flags.begin(), m.flags.end(),
                               [&](const FlagSpec& f) { return f.label == parts[0] && f.surface == parts[1]; });
        if (it == m.flags.end()) {
            m.flags.push_back(FlagSpec{parts[0], parts[1], {c}});
        } else {
            it->chambers.push_back(c);
        }
    }
    intersect::validate(m);
    return m;
}

SurfaceModel build_surface(const std::string& name, std::map<std::string, std::vector<Line>>& sec) {
    if (sec["basis"].size() != 1) throw ParseError("[basis] must be a single line of labels");
    SurfaceModel s;
    s.name = name;
    s.basis = words(sec["basis"][0].text);
    const std::size_t r = s.rank();
    if (sec["gram"].size() != r) throw ParseError("[gram] must have one row per basis label");
    s.gram = Matrix(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        const Vec row = vector_at(sec["gram"][i], sec["gram"][i].text, r);
        for (std::size_t j = 0; j < r; ++j) s.gram(i, j) = row[j];
    }
    if (sec["canonical"].size() != 1) throw ParseError("[canonical] must be a single line");
    s.canonical = vector_at(sec["canonical"][0], sec["canonical"][0].text, r);
    for (const auto& l : sec["negative_curves"]) s.negative_curves.push_back(named_at(l, r));
    for (const auto& l : sec["eff_cone"]) s.eff_cone.push_back(named_at(l, r));
    for (const auto& l : sec["nef_witnesses"]) s.nef_witnesses.push_back(named_at(l, r));
    intersect::validate(s);
    return s;
}

}  // namespace

Model parse_model(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    std::string name, kind, current;
    bool header = false;
    std::map<std::string, std::vector<Line>> sections;
    while (std::getline(in, raw)) {
        ++number;
        const auto hash = raw.find('#');
        const std::string t = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (t.empty()) continue;
        const Line l{number, t};
        if (!header) {
            if (t != kModelHeader) fail(l, std::string("expected header '") + kModelHeader + "'");
            header = true;
            continue;
        }
        if (t.front() == '[') {
            if (t.back() != ']') fail(l, "unterminated section header");
            current = t.substr(1, t.size() - 2);
            if (sections.count(current)) fail(l, "duplicate section [" + current + "]");
            sections[current];
            continue;
        }
        if (current.empty()) {
            const auto w = words(t);
            if (w.size() != 2) fail(l, "expected 'name VALUE' or 'kind VALUE'");
            if (w[0] == "name") {
                name = w[1];
            } else if (w[0] == "kind") {
                kind = w[1];
            } else {
                fail(l, "unknown key '" + w[0] + "'");
            }
            continue;
        }
        sections[current].push_back(l);
    }
    if (!header) throw ParseError("empty model file");
    if (name.empty()) throw ParseError("missing 'name'");
    const auto& allowed = kind == "threefold" ? kThreefoldSections : kSurfaceSections;
    if (kind != "threefold" && kind != "surface") throw ParseError("kind must be 'threefold' or 'surface'");
    for (const auto& [s, lines] : sections) {
        if (std::find(allowed.begin(), allowed.end(), s) == allowed.end()) {
            throw ParseError("unknown section [" + s + "] for kind " + kind);
        }
    }
    if (kind == "threefold") return build_threefold(name, sections);
    return build_surface(name, sections);
}

std::string print_model(const Model& model) {
    std::ostringstream out;
    out << kModelHeader << "\n";
    auto named = [&](const char* section, const std::vector<NamedClass>& v) {
        out << "\n[" << section << "]\n";
        for (const auto& c : v) out << c.label << ": " << join(c.value) << "\n";
    };
    if (const auto* m = std::get_if<ThreefoldModel>(&model)) {
        out << "name " << m->name << "\nkind threefold\n\n[basis]\n";
        for (std::size_t i = 0; i < m->rank(); ++i) out << (i ? " " : "") << m->basis[i];
        out << "\n\n[triple]\n";
        for (std::size_t i = 0; i < m->rank(); ++i)
            for (std::size_t j = i; j < m->rank(); ++j)
                for (std::size_t k = j; k < m->rank(); ++k)
                    if (m->at(i, j, k) != 0) out << i << " " << j << " " << k << " = " << to_string(m->at(i, j, k)) << "\n";
        out << "\n[anticanonical]\n" << join(m->anticanonical) << "\n";
        named("curves", m->curves);
        named("divisors", m->divisors);
        out << "\n[effective]\n";
        for (std::size_t i = 0; i < m->effective.size(); ++i) out << (i ? " " : "") << m->effective[i];
        out << "\n\n[chambers]\n";
        for (const auto& [label, cs] : m->chambers)
            for (const auto& c : cs) out << label << ": " << chamber_text(c) << "\n";
        out << "\n[flags]\n";
        for (const auto& f : m->flags)
            for (const auto& c : f.chambers) out << f.label << ": " << f.surface << " : " << chamber_text(c) << "\n";
    } else {
        const auto& s = std::get<SurfaceModel>(model);
        out << "name " << s.name << "\nkind surface\n\n[basis]\n";
        for (std::size_t i = 0; i < s.rank(); ++i) out << (i ? " " : "") << s.basis[i];
        out << "\n\n[gram]\n";
        for (std::size_t i = 0; i < s.rank(); ++i) {
            for (std::size_t j = 0; j < s.rank(); ++j) out << (j ? " " : "") << to_string(s.gram(i, j));
            out << "\n";
        }
        out << "\n[canonical]\n" << join(s.canonical) << "\n";
        named("negative_curves", s.negative_curves);
        named("eff_cone", s.eff_cone);
        named("nef_witnesses", s.nef_witnesses);
    }
    return out.str();
}

const std::string& model_name(const Model& m) {
    return std::visit([](const auto& x) -> const std::string& { return x.name; }, m);
}

}  // namespace kstab::cli
