#pragma once

#include <stdexcept>
#include <string>

namespace kstab {

/// Base class of every computation error raised by the engine. The CLI maps
/// these to exit code 2; anything else escaping a command is a bug.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define KSTAB_DEFINE_ERROR(Name)                                             \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(#Name, what) {}       \
    }

KSTAB_DEFINE_ERROR(DomainError);
KSTAB_DEFINE_ERROR(DimensionMismatch);
KSTAB_DEFINE_ERROR(IrrationalWall);
KSTAB_DEFINE_ERROR(DegenerateLattice);
KSTAB_DEFINE_ERROR(OddLattice);
KSTAB_DEFINE_ERROR(GroupTooLarge);
KSTAB_DEFINE_ERROR(DependentBasis);
KSTAB_DEFINE_ERROR(ParityError);
KSTAB_DEFINE_ERROR(NotPseudoEffective);
KSTAB_DEFINE_ERROR(IndefiniteSupport);
KSTAB_DEFINE_ERROR(UnboundedDirection);
KSTAB_DEFINE_ERROR(WallCrossingDegeneracy);
KSTAB_DEFINE_ERROR(CertificateViolation);
KSTAB_DEFINE_ERROR(NonpositiveVolume);
KSTAB_DEFINE_ERROR(OriginNotInterior);
KSTAB_DEFINE_ERROR(NotReflexive);
KSTAB_DEFINE_ERROR(DegeneratePolytope);
KSTAB_DEFINE_ERROR(ParseError);

#undef KSTAB_DEFINE_ERROR

}  // namespace kstab
