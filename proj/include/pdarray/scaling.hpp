#ifndef PDARRAY_SCALING_HPP
#define PDARRAY_SCALING_HPP

#include <span>
#include <string>

#include "pdarray/beam.hpp"

namespace pdarray::scaling {

// Electrical SNR ratios everywhere: gamma_db = 10 log10(gamma). A 20 dB
// operating point means gamma = 100, not an optical power ratio.
double db_to_linear(double db);
double linear_to_db(double gamma);

struct LinkBudget {
    double responsivity = 1.0;    // A/W
    double p_tot_optical = 1e-3;  // W
    double noise_density = 1e-21; // W/Hz
    double ref_bandwidth = 1e9;   // Hz
};

// Bandwidth-vs-area exponent xi in B = M^xi B0.
enum class PdRegime { CapacitanceLimited, ThicknessOptimized, TransitTimeLimited };

double xi_value(PdRegime regime); // 1, 1/2, 0

struct PdPhysical {
    double permittivity = 0.0;    // F/m
    double area = 1e-8;           // m^2
    double thickness = 1e-6;      // m
    double load_resistance = 0.0; // Ohm
    double transit_time = 0.0;    // s
};

struct ScalingReport {
    double m = 1.0;
    double xi = 1.0;
    double gamma_star = 1.0;   // linear
    double beta_sq = 1.0;
    double beta_min_sq = 1.0;
    double rate_array = 0.0;   // Hz * nats
    double rate_ref = 0.0;     // Hz * nats
    bool meets_reference = true;
    double alpha = 1.0;        // optical power scale to meet the reference
};

// 3-dB bandwidth 1/sqrt((2 pi R_L C_j)^2 + (2 pi t_tau)^2), C_j = eps A / d.
double pd_bandwidth_physical(const PdPhysical& phys);

// Square-law SNR of one PD: (R p)^2 / (B N0).
double snr_per_pd(const LinkBudget& budget, double p_m, double bandwidth);

// (R P_tot)^2 / (B N0), the degenerate-distribution optimum at bandwidth B.
double gamma_star_mrc(const LinkBudget& budget, double bandwidth);

// Maximal-ratio-combined SNR of a capture profile: sum of branch SNRs.
double mrc_snr(const beam::CaptureProfile& profile, const LinkBudget& budget,
               double bandwidth);

// beta^2 = sum of squared power fractions.
double loss_factor(const beam::CaptureProfile& profile);
double loss_factor(std::span<const double> fractions);

// Closed-form beta^2 for the hexagonal layout (reference-disk normalized).
double beta_gauss(int rings, double rho);
double beta_lg10(int rings, double rho);

// Square of the central-PD fraction alone.
double beta_central_only(beam::BeamKind kind, int rings, double rho);

// beta_min^2 = (M^xi / gamma) [(1 + gamma)^{1/M^xi} - 1], evaluated through
// expm1/log1p so it stays exact up to M ~ 1e12.
double beta_min(double m, double xi, double gamma_star);
double beta_min(double m, PdRegime regime, double gamma_star);

// lim_{M->inf} beta_min^2 = ln(1 + gamma)/gamma (xi > 0).
double beta_min_floor(double gamma_star);

// Shannon rate M^xi B0 ln(1 + beta^2 gamma / M^xi), in Hz * nats.
double achievable_rate(double m, double xi, double beta_sq, double gamma_star, double b0);

ScalingReport compare_to_reference(double m, double xi, double beta_sq, double gamma_star,
                                   double b0);

} // namespace pdarray::scaling

#endif
