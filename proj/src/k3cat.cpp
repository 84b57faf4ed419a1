#include "kstab/k3cat.hpp"

#include "kstab/errors.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace kstab::k3cat {

namespace {

// Lemma on BN generality: a degree-22 K3 is Brill-Noether general iff it
// avoids these eleven NL divisors.
constexpr std::array<std::pair<long, long>, 11> kBnExcluding{{
    {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0},
    {7, 2}, {8, 2}, {9, 2}, {10, 4}, {11, 4},
}};

// Lemma on the four types of very general anticanonical sections.
struct TypeRow {
    long h;
    long m;
    Tag tag;
    const char* label;
};
constexpr std::array<TypeRow, 4> kTypes{{
    {11, 4, Tag::type_i, "I"},
    {9, 2, Tag::type_ii, "II"},
    {6, 0, Tag::type_iii, "III"},
    {5, 0, Tag::type_iv, "IV"},
}};

}  // namespace

std::string to_string(Tag tag) {
    switch (tag) {
        case Tag::type_i: return "type-I";
        case Tag::type_ii: return "type-II";
        case Tag::type_iii: return "type-III";
        case Tag::type_iv: return "type-IV";
        case Tag::bn_excluding: return "BN-excluding";
        case Tag::nodal: return "nodal";
    }
    return "?";
}

lattice::GramLattice nl_gram(long d, long h, long m) {
    if (d <= 0 || d % 2 != 0) throw DomainError("NL degree must be even and positive");
    IntMatrix g(2, 2);
    g(0, 0) = d;
    g(0, 1) = g(1, 0) = h;
    g(1, 1) = m;
    return lattice::GramLattice(g);
}

NLDivisorRecord nl_record(long d, long h, long m) {
    return NLDivisorRecord{d, h, m,
                           "D^" + std::to_string(d) + "_{" + std::to_string(h) + "," +
                               std::to_string(m) + "}",
                           nl_gram(d, h, m)};
}

bool is_bn_excluding(long h, long m) {
    return std::find(kBnExcluding.begin(), kBnExcluding.end(), std::pair{h, m}) != kBnExcluding.end();
}

std::optional<std::string> type_of(long h, long m) {
    for (const auto& row : kTypes)
        if (row.h == h && row.m == m) return std::string(row.label);
    return std::nullopt;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<std::pair<long, long>> keys(kBnExcluding.begin(), kBnExcluding.end());
        for (const auto& row : kTypes) keys.emplace_back(row.h, row.m);
        keys.emplace_back(0, -2);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        std::vector<CatalogEntry> out;
        for (const auto& [h, m] : keys) {
            CatalogEntry e{nl_record(kDegree, h, m), {}};
            for (const auto& row : kTypes)
                if (row.h == h && row.m == m) e.tags.push_back(row.tag);
            if (is_bn_excluding(h, m)) e.tags.push_back(Tag::bn_excluding);
            if (h == 0 && m == -2) e.tags.push_back(Tag::nodal);
            out.push_back(std::move(e));
        }
        return out;
    }();
    return entries;
}

long k3_section_count(long degree) {
    if (degree < 0) throw DomainError("negative degree");
    if (degree % 2 != 0) throw ParityError("K3 line bundles have even square");
    return degree / 2 + 2;
}

long genus_to_volume(long genus) {
    if (genus < 2) throw DomainError("genus must be at least 2");
    return 2 * genus - 2;
}

long volume_to_genus(long volume) {
    if (volume <= 0) throw DomainError("volume must be positive");
    if (volume % 2 != 0) throw ParityError("anticanonical volume of a Fano threefold is even");
    return volume / 2 + 1;
}

long cyclic_cover_volume(long m) {
    if (m < 1) throw DomainError("cover degree must be positive");
    return kDegree * m * m;
}

}  // namespace kstab::k3cat
