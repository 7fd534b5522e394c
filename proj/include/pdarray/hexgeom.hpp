#ifndef PDARRAY_HEXGEOM_HPP
#define PDARRAY_HEXGEOM_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pdarray::hexgeom {

enum class PdRole { Central, Corner, Edge };

// PaperFaithful assigns every non-corner PD of ring g the hexagon inradius
// sqrt(3) g rho; ExactLattice places each PD at its true lattice coordinate
// (center spacing 2 rho). Corner distances agree between the two.
enum class DistanceModel { PaperFaithful, ExactLattice };

const char* to_string(PdRole role);
const char* to_string(DistanceModel model);

// PDs sharing (ring, role, center distance), multiplicity-weighted.
struct PdGroup {
    double distance = 0.0; // center offset from the beam axis, beam-waist units
    int ring = 0;
    PdRole role = PdRole::Central;
    int multiplicity = 1;
};

struct ArrayLayout {
    int rings = 0;       // G
    long size = 1;       // M = 1 + 3G(G+1)
    double rho = 0.0;    // PD radius / beam waist
    DistanceModel model = DistanceModel::PaperFaithful;
    std::vector<PdGroup> groups; // central first, then rings ascending
};

// One PD at its hex-lattice coordinate (beam-waist units).
struct LatticeSite {
    double x = 0.0, y = 0.0;
    int ring = 0;
    PdRole role = PdRole::Central;
};

long array_size(int rings);                 // 1 + 3G(G+1)
std::optional<int> rings_for(long m);       // exact inverse, nullopt if m is not hexagonal
long nearest_valid_m(long m);               // closest 1 + 3G(G+1); ties resolve downward

ArrayLayout layout(int rings, double rho,
                   DistanceModel model = DistanceModel::PaperFaithful);

// Ring-walk enumeration of all M sites, central first, rings ascending.
std::vector<LatticeSite> lattice_sites(int rings, double rho);

// CSV dump (index,x,y,distance,role,ring); distances follow the layout's
// model, coordinates are the true lattice positions.
void write_layout_csv(std::ostream& os, const ArrayLayout& lay);

} // namespace pdarray::hexgeom

#endif
