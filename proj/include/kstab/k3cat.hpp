#pragma once

#include "kstab/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kstab::k3cat {

constexpr long kDegree = 22;

struct NLDivisorRecord {
    long degree = kDegree;
    long h = 0;
    long m = 0;
    std::string name;   // "D^22_{h,m}"
    lattice::GramLattice gram;
};

enum class Tag { type_i, type_ii, type_iii, type_iv, bn_excluding, nodal };

std::string to_string(Tag tag);

struct CatalogEntry {
    NLDivisorRecord record;
    std::vector<Tag> tags;
};

/// [[d, h], [h, m]] for any even positive d.
lattice::GramLattice nl_gram(long d, long h, long m);

NLDivisorRecord nl_record(long d, long h, long m);

/// Raw membership in the eleven degree-22 Brill-Noether-excluding pairs.
bool is_bn_excluding(long h, long m);

/// "I".."IV" when (h, m) is one of the four lattice types of a very general
/// anticanonical section of a degenerate model.
std::optional<std::string> type_of(long h, long m);

/// Every tagged genus-12 entry, in (h, m) order. (11, 4) carries two tags.
const std::vector<CatalogEntry>& catalog();

/// h^0 of a line bundle of the given (even, >= 0) square on a K3 surface.
long k3_section_count(long degree);

/// (-K)^3 = 2g - 2.
long genus_to_volume(long genus);
/// g = (-K)^3 / 2 + 1.
long volume_to_genus(long volume);

/// Anticanonical volume of an m-fold cyclic cover of a degree-22 Fano.
long cyclic_cover_volume(long m);

}  // namespace kstab::k3cat
