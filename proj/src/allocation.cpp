#include "pdarray/allocation.hpp"

#include <cmath>
#include <stdexcept>

namespace pdarray::allocation {

AllocationProblem AllocationProblem::equal_pds(int m, double p_tot, double responsivity,
                                               double noise_density, double bandwidth) {
    AllocationProblem p;
    p.m = m;
    p.p_tot = p_tot;
    p.responsivity.assign(static_cast<std::size_t>(m), responsivity);
    p.noise_density.assign(static_cast<std::size_t>(m), noise_density);
    p.bandwidth = bandwidth;
    return p;
}

void validate(const AllocationProblem& problem) {
    if (problem.m < 1) throw std::domain_error("allocation: m must be >= 1");
    if (!(problem.p_tot > 0.0)) throw std::domain_error("allocation: p_tot must be > 0");
    if (!(problem.bandwidth > 0.0)) throw std::domain_error("allocation: bandwidth must be > 0");
    if (problem.responsivity.size() != static_cast<std::size_t>(problem.m) ||
        problem.noise_density.size() != static_cast<std::size_t>(problem.m))
        throw std::invalid_argument("allocation: per-PD parameter lengths must equal m");
    for (double r : problem.responsivity)
        if (!(r > 0.0)) throw std::domain_error("allocation: responsivities must be > 0");
    for (double n : problem.noise_density)
        if (!(n > 0.0)) throw std::domain_error("allocation: noise densities must be > 0");
}

double gamma_mrc(const AllocationProblem& problem, const std::vector<double>& powers) {
    if (powers.size() != static_cast<std::size_t>(problem.m))
        throw std::invalid_argument("gamma_mrc: power vector length must equal m");
    double s = 0.0;
    for (int i = 0; i < problem.m; ++i) {
        const double current = problem.responsivity[static_cast<std::size_t>(i)] *
                               powers[static_cast<std::size_t>(i)];
        s += current * current /
             (problem.bandwidth * problem.noise_density[static_cast<std::size_t>(i)]);
    }
    return s;
}

std::vector<double> optimal_allocation(const AllocationProblem& problem) {
    validate(problem);
    int best = 0;
    double bestScore = -1.0;
    for (int i = 0; i < problem.m; ++i) {
        const double r = problem.responsivity[static_cast<std::size_t>(i)];
        const double score =
            r * r / (problem.bandwidth * problem.noise_density[static_cast<std::size_t>(i)]);
        if (score > bestScore) { // strict: ties keep the lowest index
            bestScore = score;
            best = i;
        }
    }
    std::vector<double> powers(static_cast<std::size_t>(problem.m), 0.0);
    powers[static_cast<std::size_t>(best)] = problem.p_tot;
    return powers;
}

namespace {

// Best composition within a fixed first coordinate, remaining coordinates
// iterated in descending order so ties resolve toward earlier vertices.
void search_tail(const AllocationProblem& problem, std::vector<int>& counts, int index,
                 int remaining, double unit, SearchResult& best) {
    if (index == problem.m - 1) {
        counts[static_cast<std::size_t>(index)] = remaining;
        std::vector<double> powers(static_cast<std::size_t>(problem.m));
        for (int i = 0; i < problem.m; ++i)
            powers[static_cast<std::size_t>(i)] = unit * counts[static_cast<std::size_t>(i)];
        const double g = gamma_mrc(problem, powers);
        if (g > best.best_gamma) {
            best.best_gamma = g;
            best.best_powers = powers;
        }
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        counts[static_cast<std::size_t>(index)] = k;
        search_tail(problem, counts, index + 1, remaining - k, unit, best);
    }
}

} // namespace

SearchResult brute_force_allocation_search(const AllocationProblem& problem, int grid_steps,
                                           RunMode mode) {
    validate(problem);
    if (problem.m > 4)
        throw std::invalid_argument("brute_force_allocation_search: m <= 4 required");
    if (grid_steps < 1 || grid_steps > 200)
        throw std::invalid_argument("brute_force_allocation_search: grid_steps in [1,200]");

    const double unit = problem.p_tot / static_cast<double>(grid_steps);

    if (problem.m == 1)
        return {{problem.p_tot}, gamma_mrc(problem, {problem.p_tot})};

    // partition by the first coordinate, descending
    std::vector<SearchResult> partial(static_cast<std::size_t>(grid_steps) + 1);
    for_each_index(static_cast<std::size_t>(grid_steps) + 1, mode, [&](std::size_t slot) {
        const int k1 = grid_steps - static_cast<int>(slot);
        SearchResult local;
        local.best_gamma = -1.0;
        std::vector<int> counts(static_cast<std::size_t>(problem.m), 0);
        counts[0] = k1;
        search_tail(problem, counts, 1, grid_steps - k1, unit, local);
        partial[slot] = std::move(local);
    });

    SearchResult best;
    best.best_gamma = -1.0;
    for (const auto& local : partial)
        if (local.best_gamma > best.best_gamma) best = local;
    return best;
}

} // namespace pdarray::allocation
