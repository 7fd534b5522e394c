#ifndef PDARRAY_VERIFY_HPP
#define PDARRAY_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pdarray/beam.hpp"
#include "pdarray/hexgeom.hpp"
#include "pdarray/quadrature.hpp"
#include "pdarray/rng.hpp"
#include "pdarray/runmode.hpp"

namespace pdarray::verify {

// Strict tightens the quadrature tolerance to 1e-14 with a tiny subdivision
// budget; it is expected to fail and demonstrates that accuracy shortfalls
// surface as errors instead of silently degraded numbers.
enum class Profile { Default, Strict };

struct Check {
    std::string name;
    bool passed = false;
    double observed = 0.0; // worst measured value
    double bound = 0.0;    // what it was compared against
    std::string detail;
};

struct Report {
    Profile profile = Profile::Default;
    std::vector<Check> checks;
    bool all_passed() const;
};

Report run(Profile profile = Profile::Default, RunMode mode = RunMode::Parallel);

// CSV: name,passed,observed,bound,detail
void write_report_csv(std::ostream& os, const Report& report);

// Worst |closed-form fraction - quadrature fraction| over the layout's
// groups. The quadrature side integrates at the layout's actual distances,
// so perturbed geometry shows up as a gap (used by fault-injection tests).
double max_closed_vs_oracle_gap(beam::BeamKind kind, const hexgeom::ArrayLayout& lay,
                                const quadrature::Spec& qspec);

// Random simplex vector q and a p that majorizes it (built from q by mass
// transfers toward already-larger coordinates).
std::pair<std::vector<double>, std::vector<double>> random_majorizing_pair(
    rng::Xoshiro256pp& gen, int n);

} // namespace pdarray::verify

#endif
