#pragma once

#include "kstab/intersect.hpp"
#include "kstab/piecewise.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kstab::zariski {

using intersect::SurfaceModel;
using intersect::ThreefoldModel;

struct ZariskiResult {
    Vec positive;
    Vec negative_class;
    std::vector<std::pair<std::string, Rational>> negative;  // support curve, coefficient > 0
    Matrix support_gram;
    Rational volume;  // positive^2
};

/// Pseudo-effectivity relative to the declared data: every nef witness pairs
/// >= 0 and D lies in the cone of the effective generators (exact LP).
bool is_pseudo_effective(const SurfaceModel& s, const Vec& d);

/// Fujita's iterative algorithm over the declared negative curves.
/// NotPseudoEffective, IndefiniteSupport.
ZariskiResult zariski_decompose(const SurfaceModel& s, const Vec& d);

/// zariski_decompose over many classes, in input order. Parallel kernel; the
/// first failing class (by index) rethrows its error.
std::vector<ZariskiResult> zariski_decompose_batch(const SurfaceModel& s, const std::vector<Vec>& classes);
std::vector<ZariskiResult> zariski_decompose_batch_serial(const SurfaceModel& s, const std::vector<Vec>& classes);

/// max { s : d - s z pseudo-effective }. NotPseudoEffective, UnboundedDirection.
Rational pseff_threshold(const SurfaceModel& s, const Vec& d, const Vec& z);

/// One chamber of a volume function: positive part base + x * slope and the
/// negative support, constant on (lo, hi).
struct ChamberInfo {
    Rational lo;
    Rational hi;
    Vec positive_base;
    Vec positive_slope;
    std::vector<std::string> support;
    bool lower_bound = false;
};

struct VolumeFunction {
    PiecewisePolynomial volume;
    std::vector<ChamberInfo> chambers;
    std::string certification;
};

/// vol(base + x * slope) for x in [lo, hi]; walls are found exactly by
/// sweeping the support from the left.
VolumeFunction one_param_volume(const SurfaceModel& s, const Vec& base, const Vec& slope,
                                const Rational& lo, const Rational& hi, const std::string& var = "s");

/// A cell lower(t) <= s <= upper(t) with constant Zariski support. The
/// positive part is p_const + t p_t + s p_s.
struct FlagCell {
    Polynomial lower;
    Polynomial upper;
    Polynomial volume;  // in s and t
    std::vector<std::string> support;
    Vec p_const;
    Vec p_t;
    Vec p_s;
};

struct FlagChamber {
    Rational lo;
    Rational hi;
    std::vector<Polynomial> walls;  // affine in t, 0 = walls.front() < ... < walls.back() = tau
    std::vector<FlagCell> cells;
    Rational integral;              // of vol over the chamber region
};

struct FlagVolume {
    std::vector<FlagChamber> chambers;
    Rational integral() const;
};

/// Cell structure of vol(a_base + t a_slope - s z) over t in [lo, hi],
/// 0 <= s <= tau(t). Chambers are split where walls cross.
/// IrrationalWall, WallCrossingDegeneracy, NotPseudoEffective, IndefiniteSupport.
FlagVolume two_param_flag_volume(const SurfaceModel& surf, const Vec& a_base, const Vec& a_slope,
                                 const Rational& lo, const Rational& hi, const Vec& z);

/// vol((-K) - t B) from declared chambers. CertificateViolation.
VolumeFunction threefold_volume_certified(const ThreefoldModel& m, const Vec& direction,
                                          const std::vector<intersect::ChamberSpec>& chambers,
                                          const std::string& var = "t");

}  // namespace kstab::zariski
