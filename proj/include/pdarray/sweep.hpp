#ifndef PDARRAY_SWEEP_HPP
#define PDARRAY_SWEEP_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "pdarray/beam.hpp"
#include "pdarray/hexgeom.hpp"
#include "pdarray/runmode.hpp"

namespace pdarray::sweep {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string csv() const;
    // column index by header name; throws if absent
    std::size_t column(const std::string& name) const;
};

void write_csv(std::ostream& os, const Table& table);

// beta_min^2 vs M (hexagonal M values, G = 0..g_max) for each (xi, SNR).
// Columns: M,xi,gamma_star_db,beta_min_sq,beta_min_floor
struct BetaMinSweep {
    int g_max = 600;
    std::vector<double> xi = {1.0, 0.5, 0.0};
    std::vector<double> snr_db = {10.0, 20.0};
};
Table sweep_betamin(const BetaMinSweep& spec, RunMode mode = RunMode::Parallel);

// beta^2 vs M at fixed rho, one row per (G, beam). The meets_reference flag
// is evaluated at (shade_xi, shade_snr_db).
// Columns: G,M,beam,rho,distance_model,normalization,beta_sq,beta_min_sq,meets_reference
struct FixedRhoSweep {
    int g_max = 8;
    double rho = 0.5;
    std::vector<beam::BeamKind> beams = {beam::BeamKind::Gaussian, beam::BeamKind::Lg10,
                                         beam::BeamKind::Uniform};
    hexgeom::DistanceModel model = hexgeom::DistanceModel::PaperFaithful;
    beam::Normalization norm = beam::Normalization::ReferenceDisk;
    double shade_xi = 1.0;
    double shade_snr_db = 20.0;
};
Table sweep_beta_fixed_rho(const FixedRhoSweep& spec, RunMode mode = RunMode::Parallel);

// As FixedRhoSweep but with the PD radius shrinking as rho = rho0/(G+1).
// Adds rho0 and, when both Gaussian and LG10 are swept, the per-G
// log_gap_gauss_lg10 = ln(beta_gauss^2) - ln(beta_lg10^2) column.
// Columns: G,M,beam,rho0,rho,distance_model,normalization,beta_sq,beta_min_sq,
//          meets_reference,log_gap_gauss_lg10
struct ScaledRhoSweep {
    int g_max = 8;
    double rho0 = 1.0;
    std::vector<beam::BeamKind> beams = {beam::BeamKind::Gaussian, beam::BeamKind::Lg10};
    hexgeom::DistanceModel model = hexgeom::DistanceModel::PaperFaithful;
    beam::Normalization norm = beam::Normalization::ReferenceDisk;
    double shade_xi = 1.0;
    double shade_snr_db = 20.0;
};
Table sweep_beta_scaled_rho(const ScaledRhoSweep& spec, RunMode mode = RunMode::Parallel);

// beta^2 for one (beam, G, rho) under the given model/normalization; closed
// forms when they apply, profile sums otherwise.
double beta_for(beam::BeamKind kind, int rings, double rho, hexgeom::DistanceModel model,
                beam::Normalization norm);

} // namespace pdarray::sweep

#endif
