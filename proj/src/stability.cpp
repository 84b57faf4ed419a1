#include "kstab/stability.hpp"

#include "kstab/errors.hpp"

namespace kstab::stability {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::unstable_witness: return "unstable-witness";
        case Verdict::semistable_boundary: return "semistable-boundary";
        case Verdict::positive: return "positive";
    }
    return "?";
}

Rational s_invariant(const PiecewisePolynomial& vol, const Rational& total_volume) {
    if (total_volume <= 0) throw NonpositiveVolume("total volume " + kstab::to_string(total_volume));
    if (vol.lo() != 0) throw DomainError("volume function must start at 0");
    if (vol(vol.hi()) < 0) {
        throw NonpositiveVolume("volume at the threshold is " + kstab::to_string(vol(vol.hi())));
    }
    return vol.integrate() / total_volume;
}

DivisorialVerdict beta(const std::string& divisor, const Rational& log_discrepancy, const Rational& s) {
    const Rational b = log_discrepancy - s;
    const Verdict v = b < 0 ? Verdict::unstable_witness
                            : (b == 0 ? Verdict::semistable_boundary : Verdict::positive);
    return DivisorialVerdict{divisor, log_discrepancy, s, b, v};
}

Rational sing_line_bound(int genus, int k) {
    if (genus < 3) throw DomainError("genus must be at least 3");
    return 1 + frac(genus - 12 + k, 4 * (genus - 1));
}

Rational sing_line_bound_assembled(int genus, int k) {
    const auto m = intersect::sing_line_model(genus, k);
    const auto vol = zariski::threefold_volume_certified(m, m.class_of("E"), m.chambers.at("E"));
    return s_invariant(vol.volume, m.degree());
}

FlagReport refined_s_flag(const intersect::SurfaceModel& surface,
                          const std::vector<intersect::ChamberSpec>& restriction,
                          const Vec& curve, const Rational& total_volume,
                          const std::optional<PiecewisePolynomial>& correction) {
    if (total_volume <= 0) throw NonpositiveVolume("total volume " + kstab::to_string(total_volume));
    if (restriction.empty()) throw DomainError("no restriction chambers");
    FlagReport report;
    report.surface = surface.name;
    report.curve = intersect::format_class(curve, surface.basis);
    report.prefactor = Rational(kFlagDimension) / total_volume;
    Rational integral = 0;
    for (const auto& ch : restriction) {
        auto fv = zariski::two_param_flag_volume(surface, ch.base, ch.slope, ch.lo, ch.hi, curve);
        integral += fv.integral();
        report.pieces.push_back(std::move(fv));
    }
    if (correction) {
        integral += correction->integrate();
        report.correction = "supplied correction term integrated over [" + kstab::to_string(correction->lo()) +
                            ", " + kstab::to_string(correction->hi()) + "]";
    } else {
        report.correction = "zero: the curve is not contained in the negative part of the restricted family";
    }
    report.value = report.prefactor * integral;
    if (report.value < 0) throw DomainError("negative refined invariant");
    return report;
}

}  // namespace kstab::stability
