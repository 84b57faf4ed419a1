#pragma once

#include "kstab/zariski.hpp"

#include <optional>
#include <string>

namespace kstab::stability {

enum class Verdict { unstable_witness, semistable_boundary, positive };

std::string to_string(Verdict v);

struct DivisorialVerdict {
    std::string divisor;
    Rational log_discrepancy;
    Rational s;
    Rational beta;
    Verdict verdict;
};

/// (1/V) * integral of vol over its domain [0, tau]. NonpositiveVolume when
/// V <= 0 or vol(tau) < 0; DomainError when the domain does not start at 0.
Rational s_invariant(const PiecewisePolynomial& vol, const Rational& total_volume);

DivisorialVerdict beta(const std::string& divisor, const Rational& log_discrepancy, const Rational& s);

/// 1 + (g - 12 + k) / (4 (g - 1)).
Rational sing_line_bound(int genus, int k);
/// The same bound assembled from sing_line_model, its certified chambers and
/// s_invariant.
Rational sing_line_bound_assembled(int genus, int k);

/// Dimension n in the n / V prefactor of the refined flag invariant.
constexpr int kFlagDimension = 3;

struct FlagReport {
    std::string surface;
    std::string curve;
    Rational value;
    Rational prefactor;
    std::vector<zariski::FlagVolume> pieces;  // one per t-chamber of the restriction family
    std::string correction;
};

/// (3/V) * sum of cell integrals + (3/V) * integral of the correction term.
/// The correction defaults to zero: the curve is not in the negative part of
/// the restricted family.
FlagReport refined_s_flag(const intersect::SurfaceModel& surface,
                          const std::vector<intersect::ChamberSpec>& restriction,
                          const Vec& curve, const Rational& total_volume,
                          const std::optional<PiecewisePolynomial>& correction = std::nullopt);

}  // namespace kstab::stability
