#include "pdarray/beam.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "pdarray/errors.hpp"
#include "pdarray/format.hpp"
#include "pdarray/specfun.hpp"

namespace pdarray::beam {

namespace {

constexpr double kTwoOverPi = 0.63661977236758134307553505349006;
constexpr double kDenominatorFloor = 1e-290;

void check_waist_consistency(const BeamPattern& pattern, const hexgeom::ArrayLayout& lay) {
    if (pattern.waist > 0.0) {
        // the layout fixes rho = r_PD/w; a pattern waist w/r_PD must invert it
        if (std::fabs(pattern.waist * lay.rho - 1.0) > 1e-9)
            throw std::invalid_argument(
                "beam: pattern waist disagrees with layout rho (waist * rho must be 1)");
    }
}

double reference_denominator(BeamKind kind, const hexgeom::ArrayLayout& lay) {
    const double radius = (lay.rings + 1) * lay.rho;
    const double den = kind == BeamKind::Gaussian ? gaussian_disk_capture(radius)
                                                  : lg10_disk_capture(radius);
    if (!(den > kDenominatorFloor))
        throw NumericalError(
            "beam: reference-disk capture underflowed; increase rho or reduce G");
    return den;
}

} // namespace

const char* to_string(BeamKind kind) {
    switch (kind) {
        case BeamKind::Degenerate: return "degenerate";
        case BeamKind::Uniform: return "uniform";
        case BeamKind::Gaussian: return "gaussian";
        case BeamKind::Lg10: return "lg10";
    }
    return "?";
}

const char* to_string(Normalization norm) {
    return norm == Normalization::ReferenceDisk ? "reference-disk" : "array-sum";
}

std::vector<double> CaptureProfile::expanded() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(size));
    for (const auto& grp : groups)
        for (int i = 0; i < grp.multiplicity; ++i) out.push_back(grp.fraction);
    return out;
}

double intensity(const BeamPattern& pattern, double r) {
    if (!std::isfinite(r) || r < 0.0)
        throw std::domain_error("intensity: r must be finite and >= 0");
    switch (pattern.kind) {
        case BeamKind::Gaussian:
            return kTwoOverPi * std::exp(-2.0 * r * r);
        case BeamKind::Lg10:
            return 2.0 * kTwoOverPi * r * r * std::exp(-2.0 * r * r);
        default:
            throw std::domain_error(
                "intensity: degenerate/uniform patterns have no point intensity");
    }
}

double gaussian_disk_capture(double radius) {
    if (!std::isfinite(radius) || radius < 0.0)
        throw std::domain_error("gaussian_disk_capture: radius must be finite and >= 0");
    return specfun::gamma_p(1, 2.0 * radius * radius);
}

double lg10_disk_capture(double radius) {
    if (!std::isfinite(radius) || radius < 0.0)
        throw std::domain_error("lg10_disk_capture: radius must be finite and >= 0");
    return specfun::gamma_p(2, 2.0 * radius * radius);
}

double offset_disk_capture(BeamKind kind, double offset, double radius) {
    switch (kind) {
        case BeamKind::Gaussian:
            if (offset == 0.0) return gaussian_disk_capture(radius);
            return specfun::marcum_q_complement(1, 2.0 * offset, 2.0 * radius);
        case BeamKind::Lg10:
            return specfun::phi(offset, radius);
        default:
            throw std::domain_error("offset_disk_capture: needs a Gaussian or LG10 beam");
    }
}

double captured_fraction_closed(const BeamPattern& pattern, const hexgeom::ArrayLayout& lay,
                                hexgeom::PdRole role, int ring, Normalization norm) {
    if (pattern.kind != BeamKind::Gaussian && pattern.kind != BeamKind::Lg10)
        throw std::invalid_argument(
            "captured_fraction_closed: degenerate/uniform have no per-position closed form; "
            "use capture_profile");
    if (lay.model != hexgeom::DistanceModel::PaperFaithful)
        throw std::invalid_argument("captured_fraction_closed: requires PaperFaithful distances");
    check_waist_consistency(pattern, lay);
    if (role == hexgeom::PdRole::Central) {
        if (ring != 0) throw std::invalid_argument("captured_fraction_closed: central PD is ring 0");
    } else if (ring < 1 || ring > lay.rings) {
        throw std::invalid_argument("captured_fraction_closed: ring out of range");
    } else if (role == hexgeom::PdRole::Edge && ring == 1) {
        throw std::invalid_argument("captured_fraction_closed: ring 1 has no edge PDs");
    }

    double distance = 0.0;
    if (role == hexgeom::PdRole::Corner) distance = 2.0 * ring * lay.rho;
    if (role == hexgeom::PdRole::Edge) distance = 1.7320508075688772935274463415059 * ring * lay.rho;

    const double cap = offset_disk_capture(pattern.kind, distance, lay.rho);
    if (norm == Normalization::ReferenceDisk)
        return cap / reference_denominator(pattern.kind, lay);

    double total = 0.0;
    for (const auto& grp : lay.groups)
        total += grp.multiplicity * offset_disk_capture(pattern.kind, grp.distance, lay.rho);
    if (!(total > kDenominatorFloor))
        throw NumericalError("beam: array capture underflowed; increase rho");
    return cap / total;
}

CaptureProfile capture_profile(const BeamPattern& pattern, const hexgeom::ArrayLayout& lay,
                               Normalization norm) {
    check_waist_consistency(pattern, lay);
    CaptureProfile profile;
    profile.kind = pattern.kind;
    profile.rings = lay.rings;
    profile.size = lay.size;
    profile.rho = lay.rho;
    profile.norm = norm;
    profile.groups.reserve(lay.groups.size());

    switch (pattern.kind) {
        case BeamKind::Degenerate:
            for (const auto& grp : lay.groups) {
                const double f = grp.role == hexgeom::PdRole::Central ? 1.0 : 0.0;
                profile.groups.push_back({grp.distance, grp.ring, grp.role, grp.multiplicity, f});
            }
            break;
        case BeamKind::Uniform: {
            const double f = 1.0 / static_cast<double>(lay.size);
            for (const auto& grp : lay.groups)
                profile.groups.push_back({grp.distance, grp.ring, grp.role, grp.multiplicity, f});
            break;
        }
        case BeamKind::Gaussian:
        case BeamKind::Lg10: {
            std::vector<double> caps;
            caps.reserve(lay.groups.size());
            double arrayTotal = 0.0;
            for (const auto& grp : lay.groups) {
                const double c = offset_disk_capture(pattern.kind, grp.distance, lay.rho);
                caps.push_back(c);
                arrayTotal += grp.multiplicity * c;
            }
            double den;
            if (norm == Normalization::ReferenceDisk) {
                den = reference_denominator(pattern.kind, lay);
            } else {
                den = arrayTotal;
                if (!(den > kDenominatorFloor))
                    throw NumericalError("beam: array capture underflowed; increase rho");
            }
            for (std::size_t i = 0; i < lay.groups.size(); ++i) {
                const auto& grp = lay.groups[i];
                profile.groups.push_back(
                    {grp.distance, grp.ring, grp.role, grp.multiplicity, caps[i] / den});
            }
            break;
        }
    }

    double total = 0.0;
    for (const auto& grp : profile.groups) total += grp.multiplicity * grp.fraction;
    profile.total_fraction = total;
    return profile;
}

void write_profile_csv(std::ostream& os, const CaptureProfile& profile) {
    os << "index,ring,role,fraction\n";
    long index = 0;
    for (const auto& grp : profile.groups)
        for (int i = 0; i < grp.multiplicity; ++i)
            os << index++ << ',' << grp.ring << ',' << hexgeom::to_string(grp.role) << ','
               << format::number(grp.fraction) << '\n';
}

} // namespace pdarray::beam
