#ifndef PDARRAY_QUADRATURE_HPP
#define PDARRAY_QUADRATURE_HPP

#include <cstdint>
#include <functional>

#include "pdarray/runmode.hpp"

namespace pdarray::quadrature {

enum class Scheme { PolarAdaptive, MonteCarlo };

struct Spec {
    double rel_tolerance = 1e-9;
    int max_subdivisions = 2000;
    Scheme scheme = Scheme::PolarAdaptive;
    std::uint64_t seed = 0x5EEDBA5EULL; // MonteCarlo only
    long n_samples = 4'000'000;         // MonteCarlo only
};

using RadialIntensity = std::function<double(double)>;

struct McResult {
    double value = 0.0;
    double std_error = 0.0;
    long n_samples = 0;
};

// Adaptive Gauss-Kronrod 7/15 on [a,b]; throws NumericalError with the
// achieved error once max_subdivisions is exhausted.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tolerance, double abs_floor, int max_subdivisions);

// Integral of a radially symmetric intensity over a disk of given radius
// whose center is offset from the symmetry axis. Nested adaptive quadrature,
// angle inside radius, exploiting the intensity's symmetry about the axis.
double disk_capture(const RadialIntensity& intensity, double offset, double radius,
                    const Spec& spec = {});

// Structurally independent second oracle: plain Monte Carlo over the disk.
// Sampling is chunked with per-chunk counter-derived streams, so the result
// is bit-identical for both run modes and any thread count.
McResult disk_capture_mc(const RadialIntensity& intensity, double offset, double radius,
                         long n_samples, std::uint64_t seed,
                         RunMode mode = RunMode::Parallel);

// Dispatch on spec.scheme (MonteCarlo discards the error estimate).
double disk_capture_dispatch(const RadialIntensity& intensity, double offset, double radius,
                             const Spec& spec);

} // namespace pdarray::quadrature

#endif
