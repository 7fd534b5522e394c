#include "pdarray/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdarray/errors.hpp"
#include "pdarray/rng.hpp"

namespace pdarray::quadrature {

namespace {

// Gauss-Kronrod 7/15 abscissae and weights (QUADPACK).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Estimate {
    double value;
    double error;
};

template <class F>
Estimate gk15(const F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double resultGauss = kWg[3] * fc;
    double resultKronrod = kWgk[7] * fc;

    double fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        fv1[j] = f(center - dx);
        fv2[j] = f(center + dx);
        const double sum = fv1[j] + fv2[j];
        resultKronrod += kWgk[j] * sum;
        if (j % 2 == 1) resultGauss += kWg[j / 2] * sum;
    }

    const double value = resultKronrod * half;
    double err = std::fabs((resultKronrod - resultGauss) * half);

    // QUADPACK-style error rescaling
    double resasc = kWgk[7] * std::fabs(fc - resultKronrod / 2.0);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::fabs(fv1[j] - resultKronrod / 2.0) +
                             std::fabs(fv2[j] - resultKronrod / 2.0));
    resasc *= std::fabs(half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    return {value, err};
}

struct Interval {
    double a, b, value, error;
    bool operator<(const Interval& other) const { return error < other.error; }
};

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tolerance, double abs_floor, int max_subdivisions) {
    if (!(b > a)) {
        if (a == b) return 0.0;
        throw std::domain_error("integrate: requires b >= a");
    }
    std::priority_queue<Interval> queue;
    Estimate whole = gk15(f, a, b);
    double total = whole.value;
    double totalErr = whole.error;
    queue.push({a, b, whole.value, whole.error});

    int splits = 0;
    while (totalErr > std::max(abs_floor, rel_tolerance * std::fabs(total))) {
        if (++splits > max_subdivisions)
            throw NumericalError("integrate: accuracy not reached within max_subdivisions (achieved error " +
                                 std::to_string(totalErr) + ", value " + std::to_string(total) + ")");
        const Interval worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            throw NumericalError("integrate: interval collapsed below machine precision");
        const Estimate left = gk15(f, worst.a, mid);
        const Estimate right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        totalErr += left.error + right.error - worst.error;
        queue.push({worst.a, mid, left.value, left.error});
        queue.push({mid, worst.b, right.value, right.error});
    }
    return total;
}

double disk_capture(const RadialIntensity& intensity, double offset, double radius,
                    const Spec& spec) {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw std::domain_error("disk_capture: radius must be positive and finite");
    if (offset < 0.0 || !std::isfinite(offset))
        throw std::domain_error("disk_capture: offset must be finite and >= 0");
    if (!(spec.rel_tolerance > 0.0))
        throw std::domain_error("disk_capture: rel_tolerance must be > 0");

    const double innerTol = 0.25 * spec.rel_tolerance;
    // polar coordinates about the disk center; the angular integrand depends
    // only on the distance to the beam axis, so [0, pi] suffices
    const auto ringIntegral = [&](double s) {
        if (s == 0.0) return 0.0;
        const auto g = [&](double theta) {
            const double r =
                std::sqrt(offset * offset + s * s + 2.0 * offset * s * std::cos(theta));
            return intensity(r);
        };
        constexpr double kPi = 3.1415926535897932384626433832795;
        return 2.0 * s * integrate(g, 0.0, kPi, innerTol, 1e-20, spec.max_subdivisions);
    };
    return integrate(ringIntegral, 0.0, radius, spec.rel_tolerance, 1e-18,
                     spec.max_subdivisions);
}

McResult disk_capture_mc(const RadialIntensity& intensity, double offset, double radius,
                         long n_samples, std::uint64_t seed, RunMode mode) {
    if (!(radius > 0.0) || offset < 0.0)
        throw std::domain_error("disk_capture_mc: bad disk geometry");
    if (n_samples < 2) throw std::domain_error("disk_capture_mc: need at least 2 samples");

    constexpr long kChunk = 4096;
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    const long nChunks = (n_samples + kChunk - 1) / kChunk;
    std::vector<double> sums(static_cast<std::size_t>(nChunks));
    std::vector<double> sqSums(static_cast<std::size_t>(nChunks));

    for_each_index(static_cast<std::size_t>(nChunks), mode, [&](std::size_t c) {
        auto gen = rng::stream(seed, static_cast<std::uint64_t>(c));
        const long begin = static_cast<long>(c) * kChunk;
        const long end = std::min(begin + kChunk, n_samples);
        double s = 0.0, s2 = 0.0;
        for (long i = begin; i < end; ++i) {
            const double u = gen.uniform();
            const double v = gen.uniform();
            const double rr = radius * std::sqrt(u);
            const double th = kTwoPi * v;
            const double r = std::sqrt(offset * offset + rr * rr +
                                       2.0 * offset * rr * std::cos(th));
            const double val = intensity(r);
            s += val;
            s2 += val * val;
        }
        sums[c] = s;
        sqSums[c] = s2;
    });

    // reduce in fixed chunk order: identical bits for every mode/thread count
    double sum = 0.0, sq = 0.0;
    for (long c = 0; c < nChunks; ++c) {
        sum += sums[static_cast<std::size_t>(c)];
        sq += sqSums[static_cast<std::size_t>(c)];
    }
    const double n = static_cast<double>(n_samples);
    const double area = 3.1415926535897932384626433832795 * radius * radius;
    const double mean = sum / n;
    const double var = std::max(0.0, sq / n - mean * mean);
    return {area * mean, area * std::sqrt(var / n), n_samples};
}

double disk_capture_dispatch(const RadialIntensity& intensity, double offset, double radius,
                             const Spec& spec) {
    if (spec.scheme == Scheme::PolarAdaptive)
        return disk_capture(intensity, offset, radius, spec);
    return disk_capture_mc(intensity, offset, radius, spec.n_samples, spec.seed).value;
}

} // namespace pdarray::quadrature
