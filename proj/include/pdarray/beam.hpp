#ifndef PDARRAY_BEAM_HPP
#define PDARRAY_BEAM_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "pdarray/hexgeom.hpp"

namespace pdarray::beam {

enum class BeamKind { Degenerate, Uniform, Gaussian, Lg10 };

// Fractions are reported against one of two totals:
//   ReferenceDisk - capture of the centered disk of radius (G+1) rho, the
//                   normalization built into the closed forms. The array can
//                   physically out-collect this disk at small rho, so the
//                   fractions need not sum to <= 1 there.
//   ArraySum      - captured power of the whole array; fractions sum to 1.
enum class Normalization { ReferenceDisk, ArraySum };

const char* to_string(BeamKind kind);
const char* to_string(Normalization norm);

struct BeamPattern {
    BeamKind kind = BeamKind::Gaussian;
    // Beam waist in PD-radius units (w / r_PD). 0 leaves the geometry to the
    // layout (which already fixes rho = r_PD / w); when set it must agree
    // with the layout it is combined with.
    double waist = 0.0;

    static BeamPattern degenerate() { return {BeamKind::Degenerate, 0.0}; }
    static BeamPattern uniform() { return {BeamKind::Uniform, 0.0}; }
    static BeamPattern gaussian(double waist = 0.0) { return {BeamKind::Gaussian, waist}; }
    static BeamPattern lg10(double waist = 0.0) { return {BeamKind::Lg10, waist}; }
};

struct GroupCapture {
    double distance = 0.0;
    int ring = 0;
    hexgeom::PdRole role = hexgeom::PdRole::Central;
    int multiplicity = 1;
    double fraction = 0.0; // per single PD
};

struct CaptureProfile {
    BeamKind kind = BeamKind::Gaussian;
    int rings = 0;
    long size = 1;
    double rho = 0.0;
    Normalization norm = Normalization::ReferenceDisk;
    std::vector<GroupCapture> groups;
    double total_fraction = 0.0; // multiplicity-weighted sum

    std::vector<double> expanded() const; // per-PD fractions, length M
};

// Normalized radial intensity in waist units (full-plane integral 1):
// Gaussian (2/pi) e^{-2r^2}, LG10 (4/pi) r^2 e^{-2r^2}. Degenerate and
// Uniform are not point-intensity models and raise a domain error.
double intensity(const BeamPattern& pattern, double r);

// Centered-disk cumulative captures (the closed forms' numerators and
// denominators).
double gaussian_disk_capture(double radius); // 1 - e^{-2R^2}
double lg10_disk_capture(double radius);     // 1 - e^{-2R^2} - 2R^2 e^{-2R^2}

// Capture of an offset disk for one beam (waist units).
double offset_disk_capture(BeamKind kind, double offset, double radius);

// Closed-form fraction for a single PD of the given role/ring. Requires a
// PaperFaithful layout and a Gaussian/LG10 beam.
double captured_fraction_closed(const BeamPattern& pattern, const hexgeom::ArrayLayout& lay,
                                hexgeom::PdRole role, int ring,
                                Normalization norm = Normalization::ReferenceDisk);

CaptureProfile capture_profile(const BeamPattern& pattern, const hexgeom::ArrayLayout& lay,
                               Normalization norm = Normalization::ReferenceDisk);

// CSV export (index,ring,role,fraction), one row per PD.
void write_profile_csv(std::ostream& os, const CaptureProfile& profile);

} // namespace pdarray::beam

#endif
