// Times the OpenMP lanes against their serial reference and confirms the
// outputs are bit-identical.

#include <chrono>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "pdarray/allocation.hpp"
#include "pdarray/beam.hpp"
#include "pdarray/quadrature.hpp"
#include "pdarray/runmode.hpp"
#include "pdarray/sweep.hpp"
#include "pdarray/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace pdarray;
using Clock = std::chrono::steady_clock;

template <class Fn>
double time_ms(const Fn& fn) {
    const auto t0 = Clock::now();
    fn();
    const auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serialMs, double parallelMs, bool identical) {
    std::printf("%-28s %10.1f ms %10.1f ms  x%.2f  %s\n", name, serialMs, parallelMs,
                serialMs / parallelMs, identical ? "identical" : "MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both lanes run serially\n");
#endif
    std::printf("%-28s %13s %13s\n", "kernel", "serial", "parallel");

    // Monte-Carlo disk capture
    {
        const beam::BeamPattern lg = beam::BeamPattern::lg10();
        const auto intensity = [&](double r) { return beam::intensity(lg, r); };
        quadrature::McResult a{}, b{};
        const double ts = time_ms([&] {
            a = quadrature::disk_capture_mc(intensity, 1.0, 0.5, 8'000'000, 7, RunMode::Serial);
        });
        const double tp = time_ms([&] {
            b = quadrature::disk_capture_mc(intensity, 1.0, 0.5, 8'000'000, 7, RunMode::Parallel);
        });
        report("mc-disk-capture (8e6)", ts, tp,
               a.value == b.value && a.std_error == b.std_error);
    }

    // quadrature batch over a grid of offset disks
    {
        const beam::BeamPattern gauss = beam::BeamPattern::gaussian();
        const auto intensity = [&](double r) { return beam::intensity(gauss, r); };
        std::vector<std::pair<double, double>> grid;
        for (double d = 0.0; d <= 3.0; d += 0.1)
            for (double r = 0.05; r <= 1.5; r += 0.1) grid.emplace_back(d, r);
        std::vector<double> va(grid.size()), vb(grid.size());
        const auto evalInto = [&](std::vector<double>& out, RunMode mode) {
            for_each_index(grid.size(), mode, [&](std::size_t i) {
                out[i] = quadrature::disk_capture(intensity, grid[i].first, grid[i].second);
            });
        };
        const double ts = time_ms([&] { evalInto(va, RunMode::Serial); });
        const double tp = time_ms([&] { evalInto(vb, RunMode::Parallel); });
        report("polar-quadrature grid", ts, tp, va == vb);
    }

    // brute-force allocation enumeration
    {
        auto problem = allocation::AllocationProblem::equal_pds(4, 1e-3, 0.9, 1e-21, 1e9);
        problem.responsivity = {0.7, 0.9, 0.8, 0.85};
        allocation::SearchResult a, b;
        const double ts = time_ms([&] {
            a = allocation::brute_force_allocation_search(problem, 200, RunMode::Serial);
        });
        const double tp = time_ms([&] {
            b = allocation::brute_force_allocation_search(problem, 200, RunMode::Parallel);
        });
        report("allocation search m=4", ts, tp,
               a.best_gamma == b.best_gamma && a.best_powers == b.best_powers);
    }

    // full sweep row evaluation
    {
        sweep::FixedRhoSweep spec;
        spec.g_max = 48;
        spec.rho = 0.1;
        spec.model = hexgeom::DistanceModel::ExactLattice; // profile-sum path
        std::string a, b;
        const double ts =
            time_ms([&] { a = sweep::sweep_beta_fixed_rho(spec, RunMode::Serial).csv(); });
        const double tp =
            time_ms([&] { b = sweep::sweep_beta_fixed_rho(spec, RunMode::Parallel).csv(); });
        report("beta-fixed sweep G<=48", ts, tp, a == b);
    }

    return 0;
}
