#include "pdarray/scaling.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "pdarray/errors.hpp"
#include "pdarray/specfun.hpp"

namespace pdarray::scaling {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kSqrt3 = 1.7320508075688772935274463415059;

void check_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::domain_error(std::string(name) + " must be positive and finite");
}

} // namespace

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double gamma) {
    check_positive(gamma, "linear_to_db: gamma");
    return 10.0 * std::log10(gamma);
}

double xi_value(PdRegime regime) {
    switch (regime) {
        case PdRegime::CapacitanceLimited: return 1.0;
        case PdRegime::ThicknessOptimized: return 0.5;
        case PdRegime::TransitTimeLimited: return 0.0;
    }
    return 0.0;
}

double pd_bandwidth_physical(const PdPhysical& phys) {
    if (phys.permittivity < 0.0 || phys.load_resistance < 0.0 || phys.transit_time < 0.0)
        throw std::domain_error("pd_bandwidth_physical: negative parameter");
    check_positive(phys.area, "pd_bandwidth_physical: area");
    check_positive(phys.thickness, "pd_bandwidth_physical: thickness");
    const double cj = phys.permittivity * phys.area / phys.thickness;
    const double rc = kTwoPi * phys.load_resistance * cj;
    const double tt = kTwoPi * phys.transit_time;
    if (rc == 0.0 && tt == 0.0)
        throw std::domain_error(
            "pd_bandwidth_physical: both RC and transit-time terms are zero");
    return 1.0 / std::hypot(rc, tt);
}

double snr_per_pd(const LinkBudget& budget, double p_m, double bandwidth) {
    check_positive(budget.responsivity, "snr_per_pd: responsivity");
    check_positive(budget.noise_density, "snr_per_pd: noise_density");
    check_positive(bandwidth, "snr_per_pd: bandwidth");
    if (p_m < 0.0 || !std::isfinite(p_m))
        throw std::domain_error("snr_per_pd: p_m must be finite and >= 0");
    const double current = budget.responsivity * p_m;
    return current * current / (bandwidth * budget.noise_density);
}

double gamma_star_mrc(const LinkBudget& budget, double bandwidth) {
    return snr_per_pd(budget, budget.p_tot_optical, bandwidth);
}

double mrc_snr(const beam::CaptureProfile& profile, const LinkBudget& budget,
               double bandwidth) {
    double snr = 0.0;
    for (const auto& grp : profile.groups)
        snr += grp.multiplicity *
               snr_per_pd(budget, grp.fraction * budget.p_tot_optical, bandwidth);
    return snr;
}

double loss_factor(const beam::CaptureProfile& profile) {
    double s = 0.0;
    for (const auto& grp : profile.groups)
        s += grp.multiplicity * grp.fraction * grp.fraction;
    return s;
}

double loss_factor(std::span<const double> fractions) {
    double s = 0.0;
    for (double f : fractions) s += f * f;
    return s;
}

double beta_gauss(int rings, double rho) {
    if (rings < 0) throw std::domain_error("beta_gauss: rings must be >= 0");
    check_positive(rho, "beta_gauss: rho");
    const double r1 = (rings + 1) * rho;
    const double den = specfun::gamma_p(1, 2.0 * r1 * r1);
    if (!(den > 1e-290))
        throw NumericalError("beta_gauss: reference capture underflowed; increase rho");
    const double central = specfun::gamma_p(1, 2.0 * rho * rho);
    double num = central * central;
    for (int g = 1; g <= rings; ++g) {
        const double corner = specfun::marcum_q_complement(1, 4.0 * g * rho, 2.0 * rho);
        num += 6.0 * corner * corner;
        if (g > 1) {
            const double edge =
                specfun::marcum_q_complement(1, 2.0 * kSqrt3 * g * rho, 2.0 * rho);
            num += (6.0 * g - 6.0) * edge * edge;
        }
    }
    return num / (den * den);
}

double beta_lg10(int rings, double rho) {
    if (rings < 0) throw std::domain_error("beta_lg10: rings must be >= 0");
    check_positive(rho, "beta_lg10: rho");
    const double r1 = (rings + 1) * rho;
    const double den = specfun::gamma_p(2, 2.0 * r1 * r1);
    if (!(den > 1e-290))
        throw NumericalError("beta_lg10: reference capture underflowed; increase rho");
    const double central = specfun::gamma_p(2, 2.0 * rho * rho);
    double num = central * central;
    for (int g = 1; g <= rings; ++g) {
        const double corner = specfun::phi(2.0 * g * rho, rho);
        num += 6.0 * corner * corner;
        if (g > 1) {
            const double edge = specfun::phi(kSqrt3 * g * rho, rho);
            num += (6.0 * g - 6.0) * edge * edge;
        }
    }
    return num / (den * den);
}

double beta_central_only(beam::BeamKind kind, int rings, double rho) {
    if (kind != beam::BeamKind::Gaussian && kind != beam::BeamKind::Lg10)
        throw std::invalid_argument("beta_central_only: needs a Gaussian or LG10 beam");
    if (rings < 0) throw std::domain_error("beta_central_only: rings must be >= 0");
    check_positive(rho, "beta_central_only: rho");
    const double r1 = (rings + 1) * rho;
    const long order = kind == beam::BeamKind::Gaussian ? 1 : 2;
    const double den = specfun::gamma_p(order, 2.0 * r1 * r1);
    if (!(den > 1e-290))
        throw NumericalError("beta_central_only: reference capture underflowed; increase rho");
    const double f = specfun::gamma_p(order, 2.0 * rho * rho) / den;
    return f * f;
}

double beta_min(double m, double xi, double gamma_star) {
    if (!(m >= 1.0)) throw std::domain_error("beta_min: m must be >= 1");
    if (xi < 0.0 || xi > 1.0) throw std::domain_error("beta_min: xi must be in [0,1]");
    check_positive(gamma_star, "beta_min: gamma_star");
    const double mxi = std::pow(m, xi);
    if (mxi == 1.0) return 1.0; // exponent 1 collapses the bracket to gamma
    return mxi * std::expm1(std::log1p(gamma_star) / mxi) / gamma_star;
}

double beta_min(double m, PdRegime regime, double gamma_star) {
    return beta_min(m, xi_value(regime), gamma_star);
}

double beta_min_floor(double gamma_star) {
    check_positive(gamma_star, "beta_min_floor: gamma_star");
    return std::log1p(gamma_star) / gamma_star;
}

double achievable_rate(double m, double xi, double beta_sq, double gamma_star, double b0) {
    if (!(m >= 1.0)) throw std::domain_error("achievable_rate: m must be >= 1");
    if (beta_sq < 0.0) throw std::domain_error("achievable_rate: beta_sq must be >= 0");
    check_positive(gamma_star, "achievable_rate: gamma_star");
    check_positive(b0, "achievable_rate: b0");
    const double mxi = std::pow(m, xi);
    return mxi * b0 * std::log1p(beta_sq * gamma_star / mxi);
}

ScalingReport compare_to_reference(double m, double xi, double beta_sq, double gamma_star,
                                   double b0) {
    ScalingReport rep;
    rep.m = m;
    rep.xi = xi;
    rep.gamma_star = gamma_star;
    rep.beta_sq = beta_sq;
    rep.beta_min_sq = beta_min(m, xi, gamma_star);
    rep.rate_array = achievable_rate(m, xi, beta_sq, gamma_star, b0);
    rep.rate_ref = b0 * std::log1p(gamma_star);
    rep.meets_reference = beta_sq >= rep.beta_min_sq;
    rep.alpha = beta_sq > 0.0 ? std::sqrt(rep.beta_min_sq / beta_sq)
                              : std::numeric_limits<double>::infinity();
    return rep;
}

} // namespace pdarray::scaling
