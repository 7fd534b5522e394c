#ifndef PDARRAY_ALLOCATION_HPP
#define PDARRAY_ALLOCATION_HPP

#include <vector>

#include "pdarray/runmode.hpp"

namespace pdarray::allocation {

// MRC SNR maximization over received-power splits: the optimum is always a
// simplex vertex (all power on the best PD), which the brute-force grid
// search below confirms exhaustively for small arrays.
struct AllocationProblem {
    int m = 1;
    double p_tot = 1.0;                  // W
    std::vector<double> responsivity;    // A/W, length m
    std::vector<double> noise_density;   // W/Hz, length m
    double bandwidth = 1.0;              // Hz

    static AllocationProblem equal_pds(int m, double p_tot, double responsivity,
                                       double noise_density, double bandwidth);
};

void validate(const AllocationProblem& problem);

// sum_i (R_i p_i)^2 / (B N0_i)
double gamma_mrc(const AllocationProblem& problem, const std::vector<double>& powers);

// All power on the PD with maximal R^2/(B N0); ties go to the lowest index.
std::vector<double> optimal_allocation(const AllocationProblem& problem);

struct SearchResult {
    std::vector<double> best_powers;
    double best_gamma = 0.0;
};

// Exhaustive enumeration of all compositions of grid_steps over m PDs.
// m <= 4 and grid_steps <= 200 keep the grid tractable.
SearchResult brute_force_allocation_search(const AllocationProblem& problem, int grid_steps,
                                           RunMode mode = RunMode::Parallel);

} // namespace pdarray::allocation

#endif
