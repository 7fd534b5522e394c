#include "pdarray/specfun.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pdarray/errors.hpp"

namespace pdarray::specfun {

namespace {

void require_finite_nonneg(double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0)
        throw std::domain_error(std::string(name) + " must be finite and >= 0");
}

double ln_factorial(long n) {
    static const std::array<double, 256> table = [] {
        std::array<double, 256> t{};
        t[0] = 0.0;
        for (std::size_t i = 1; i < t.size(); ++i)
            t[i] = t[i - 1] + std::log(static_cast<double>(i));
        return t;
    }();
    if (n < static_cast<long>(table.size())) return table[static_cast<std::size_t>(n)];
    return std::lgamma(static_cast<double>(n) + 1.0);
}

// e^{-x} x^j / j!, in log space to survive large x and j.
double poisson_pmf(long j, double x) {
    if (x == 0.0) return j == 0 ? 1.0 : 0.0;
    return std::exp(static_cast<double>(j) * std::log(x) - x - ln_factorial(j));
}

// Both regularized gammas at once; the smaller tail is summed directly.
struct GammaPair {
    double p, q;
};

GammaPair gamma_pq(long n, double x) {
    if (n < 1) throw std::domain_error("gamma_pq: order must be >= 1");
    if (!std::isfinite(x) || x < 0.0) throw std::domain_error("gamma_pq: x must be finite and >= 0");
    if (x == 0.0) return {0.0, 1.0};

    if (static_cast<double>(n) > x) {
        // right Poisson tail: P(n,x) = sum_{j>=n} pois(j;x)
        double t = poisson_pmf(n, x);
        double p = t;
        for (long j = n; t > p * 1e-18 && t > 0.0; ++j) {
            t *= x / static_cast<double>(j + 1);
            p += t;
        }
        return {p, 1.0 - p};
    }
    // left Poisson tail: Q(n,x) = sum_{j<=n-1} pois(j;x), summed downward
    double t = poisson_pmf(n - 1, x);
    double q = t;
    for (long j = n - 1; j > 0 && t > q * 1e-18 && t > 0.0; --j) {
        t *= static_cast<double>(j) / x;
        q += t;
    }
    return {1.0 - q, q};
}

// Two-sided Poisson-mixture sum. `lower` selects P (complement) vs Q terms.
double marcum_series(int order, double a, double b, bool lower, const Config& cfg) {
    if (order < 1) throw std::domain_error("marcum_q: order must be >= 1");
    require_finite_nonneg(a, "marcum_q: a");
    require_finite_nonneg(b, "marcum_q: b");
    if (cfg.abs_tolerance <= 0.0) throw std::domain_error("marcum_q: abs_tolerance must be > 0");
    if (cfg.max_terms < 1) throw std::domain_error("marcum_q: max_terms must be >= 1");

    if (b == 0.0) return lower ? 0.0 : 1.0;

    const double lam = 0.5 * a * a;
    const double x = 0.5 * b * b;

    if (a == 0.0) {
        const GammaPair g = gamma_pq(order, x);
        return lower ? g.p : g.q;
    }

    const long k0 = static_cast<long>(lam);
    const double p0 = poisson_pmf(k0, lam);
    const double term_cutoff = cfg.abs_tolerance * 1e-4;

    double sum = 0.0;
    double mass = 0.0;
    double tail = 0.0; // bound on the truncated Poisson mass
    long used = 0;

    // upward from the mode
    double p = p0;
    for (long k = k0;; ++k) {
        const GammaPair g = gamma_pq(k + order, x);
        sum += p * (lower ? g.p : g.q);
        mass += p;
        if (++used > cfg.max_terms)
            throw NumericalError(
                "marcum_q: series did not converge within max_terms (accumulated mass " +
                std::to_string(mass) + ")");
        p *= lam / static_cast<double>(k + 1);
        if (k >= k0 + 1 && p < term_cutoff) {
            // beyond the mode the term ratio lam/(k+2) is < 1: geometric bound
            tail += p * (static_cast<double>(k + 2) / (static_cast<double>(k + 2) - lam));
            break;
        }
    }
    // downward from the mode
    p = p0;
    for (long k = k0 - 1; k >= 0; --k) {
        p *= static_cast<double>(k + 1) / lam;
        const GammaPair g = gamma_pq(k + order, x);
        sum += p * (lower ? g.p : g.q);
        mass += p;
        if (++used > cfg.max_terms)
            throw NumericalError(
                "marcum_q: series did not converge within max_terms (accumulated mass " +
                std::to_string(mass) + ")");
        if (p < term_cutoff && k > 0) {
            tail += p * (static_cast<double>(k) / (lam - static_cast<double>(k)));
            break;
        }
    }

    if (tail > 0.5 * cfg.abs_tolerance)
        throw NumericalError("marcum_q: truncated Poisson mass bound " + std::to_string(tail) +
                             " exceeds abs_tolerance");

    // normalizing by the accumulated mass cancels the common log-space
    // rounding of the mode weight (the weights are exact relative to each
    // other up to per-step rounding)
    sum /= mass;
    if (sum < 0.0) return 0.0;
    return sum > 1.0 ? 1.0 : sum;
}

// I0 power series, valid until terms overflow; used below the asymptotic cut.
double i0_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * static_cast<double>(k));
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return sum;
}

double i1_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * static_cast<double>(k + 1));
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return 0.5 * x * sum;
}

constexpr double kAsymptoticCut = 20.0;
constexpr double kTwoPi = 6.283185307179586476925286766559;

// e^{-x} I0(x) for x >= kAsymptoticCut: I0(x) ~ e^x/sqrt(2 pi x) sum_k a_k x^{-k},
// a_0 = 1, a_k/a_{k-1} = (2k-1)^2 / (8k).
double i0_scaled_asymptotic(double x) {
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 40; ++k) {
        const double tk = 2.0 * k - 1.0;
        term *= tk * tk / (8.0 * k * x);
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return sum / std::sqrt(kTwoPi * x);
}

// e^{-x} I1(x): a_0 = 1, a_1 = -3/8, a_k/a_{k-1} = (2k-3)(2k+1) / (8k).
double i1_scaled_asymptotic(double x) {
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 40; ++k) {
        term *= (2.0 * k - 3.0) * (2.0 * k + 1.0) / (8.0 * k * x);
        sum += term;
        if (std::fabs(term) < sum * 1e-18) break;
    }
    return sum / std::sqrt(kTwoPi * x);
}

// largest x with e^x finite in double
constexpr double kExpOverflow = 709.0;

} // namespace

double gamma_p(long n, double x) { return gamma_pq(n, x).p; }
double gamma_q(long n, double x) { return gamma_pq(n, x).q; }

double bessel_i0(double x) {
    require_finite_nonneg(x, "bessel_i0: x");
    if (x < kAsymptoticCut) return i0_series(x);
    if (x > kExpOverflow)
        throw NumericalError("bessel_i0: e^x overflows for x = " + std::to_string(x) +
                             "; use bessel_i0_scaled");
    return i0_scaled_asymptotic(x) * std::exp(x);
}

double bessel_i0_scaled(double x) {
    require_finite_nonneg(x, "bessel_i0_scaled: x");
    if (x < kAsymptoticCut) return i0_series(x) * std::exp(-x);
    return i0_scaled_asymptotic(x);
}

double bessel_i1(double x) {
    require_finite_nonneg(x, "bessel_i1: x");
    if (x < kAsymptoticCut) return i1_series(x);
    if (x > kExpOverflow)
        throw NumericalError("bessel_i1: e^x overflows for x = " + std::to_string(x) +
                             "; use bessel_i1_scaled");
    return i1_scaled_asymptotic(x) * std::exp(x);
}

double bessel_i1_scaled(double x) {
    require_finite_nonneg(x, "bessel_i1_scaled: x");
    if (x < kAsymptoticCut) return i1_series(x) * std::exp(-x);
    return i1_scaled_asymptotic(x);
}

double marcum_q(int order, double a, double b, const Config& cfg) {
    return marcum_series(order, a, b, false, cfg);
}

double marcum_q_complement(int order, double a, double b, const Config& cfg) {
    return marcum_series(order, a, b, true, cfg);
}

double phi(double a, double b, const Config& cfg) {
    require_finite_nonneg(a, "phi: a");
    require_finite_nonneg(b, "phi: b");
    if (b == 0.0) return 0.0;

    const double d = a - b;
    const double scale = std::exp(-2.0 * d * d); // e^{-2(a^2+b^2)} e^{+4ab}
    const double q1c = marcum_q_complement(1, 2.0 * a, 2.0 * b, cfg);
    const double ring = 2.0 * a * b * scale * bessel_i1_scaled(4.0 * a * b);
    const double core = 2.0 * b * b * scale * bessel_i0_scaled(4.0 * a * b);
    const double v = ring + q1c - core;
    return v > 0.0 ? v : 0.0; // rounding can leave -eps when the true value is ~0
}

} // namespace pdarray::specfun
