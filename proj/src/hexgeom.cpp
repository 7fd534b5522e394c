#include "pdarray/hexgeom.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>

#include "pdarray/format.hpp"

namespace pdarray::hexgeom {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935274463415059;

// axial step directions around a ring
constexpr int kDirQ[6] = {1, 0, -1, -1, 0, 1};
constexpr int kDirR[6] = {0, 1, 1, 0, -1, -1};

void validate(int rings, double rho) {
    if (rings < 0) throw std::domain_error("hexgeom: ring count must be >= 0");
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw std::domain_error("hexgeom: rho must be positive and finite");
}

} // namespace

const char* to_string(PdRole role) {
    switch (role) {
        case PdRole::Central: return "central";
        case PdRole::Corner: return "corner";
        case PdRole::Edge: return "edge";
    }
    return "?";
}

const char* to_string(DistanceModel model) {
    return model == DistanceModel::PaperFaithful ? "paper-faithful" : "exact-lattice";
}

long array_size(int rings) {
    if (rings < 0) throw std::domain_error("array_size: ring count must be >= 0");
    const long g = rings;
    return 1 + 3 * g * (g + 1);
}

std::optional<int> rings_for(long m) {
    if (m < 1) return std::nullopt;
    // invert m = 1 + 3g(g+1)
    const double gd = (-3.0 + std::sqrt(9.0 + 12.0 * static_cast<double>(m - 1))) / 6.0;
    const long g = std::lround(gd);
    if (g >= 0 && array_size(static_cast<int>(g)) == m) return static_cast<int>(g);
    return std::nullopt;
}

long nearest_valid_m(long m) {
    if (m <= 1) return 1;
    const double gd = (-3.0 + std::sqrt(9.0 + 12.0 * static_cast<double>(m - 1))) / 6.0;
    const long lo = std::max(0L, static_cast<long>(std::floor(gd)));
    long best = array_size(static_cast<int>(lo));
    for (long g = lo; g <= lo + 1; ++g) {
        const long cand = array_size(static_cast<int>(g));
        if (std::labs(cand - m) < std::labs(best - m)) best = cand;
    }
    return best;
}

std::vector<LatticeSite> lattice_sites(int rings, double rho) {
    validate(rings, rho);
    const double spacing = 2.0 * rho;
    std::vector<LatticeSite> sites;
    sites.reserve(static_cast<std::size_t>(array_size(rings)));
    sites.push_back({0.0, 0.0, 0, PdRole::Central});
    for (int g = 1; g <= rings; ++g) {
        for (int side = 0; side < 6; ++side) {
            int q = g * kDirQ[side];
            int r = g * kDirR[side];
            const int stepDir = (side + 2) % 6;
            for (int step = 0; step < g; ++step) {
                const double x = spacing * (q + 0.5 * r);
                const double y = spacing * (0.5 * kSqrt3 * r);
                sites.push_back({x, y, g, step == 0 ? PdRole::Corner : PdRole::Edge});
                q += kDirQ[stepDir];
                r += kDirR[stepDir];
            }
        }
    }
    return sites;
}

ArrayLayout layout(int rings, double rho, DistanceModel model) {
    validate(rings, rho);
    ArrayLayout lay;
    lay.rings = rings;
    lay.size = array_size(rings);
    lay.rho = rho;
    lay.model = model;
    lay.groups.push_back({0.0, 0, PdRole::Central, 1});

    if (model == DistanceModel::PaperFaithful) {
        for (int g = 1; g <= rings; ++g) {
            lay.groups.push_back({2.0 * g * rho, g, PdRole::Corner, 6});
            if (g > 1) lay.groups.push_back({kSqrt3 * g * rho, g, PdRole::Edge, 6 * g - 6});
        }
    } else {
        for (int g = 1; g <= rings; ++g) {
            // squared center distance in lattice units is the integer norm
            // q^2 + qr + r^2; group ring sites by it (corners have norm g^2)
            std::map<long, int> byNorm;
            for (int side = 0; side < 6; ++side) {
                int q = g * kDirQ[side];
                int r = g * kDirR[side];
                const int stepDir = (side + 2) % 6;
                for (int step = 0; step < g; ++step) {
                    const long norm = static_cast<long>(q) * q + static_cast<long>(q) * r +
                                      static_cast<long>(r) * r;
                    ++byNorm[norm];
                    q += kDirQ[stepDir];
                    r += kDirR[stepDir];
                }
            }
            const long cornerNorm = static_cast<long>(g) * g;
            lay.groups.push_back(
                {2.0 * rho * std::sqrt(static_cast<double>(cornerNorm)), g, PdRole::Corner, 6});
            for (const auto& [norm, count] : byNorm) {
                if (norm == cornerNorm) continue;
                lay.groups.push_back(
                    {2.0 * rho * std::sqrt(static_cast<double>(norm)), g, PdRole::Edge, count});
            }
        }
    }

    long total = 0;
    for (const auto& grp : lay.groups) total += grp.multiplicity;
    if (total != lay.size) throw std::logic_error("hexgeom: multiplicity bookkeeping broken");
    return lay;
}

void write_layout_csv(std::ostream& os, const ArrayLayout& lay) {
    os << "index,x,y,distance,role,ring\n";
    const auto sites = lattice_sites(lay.rings, lay.rho);
    long index = 0;
    for (const auto& site : sites) {
        double distance = std::hypot(site.x, site.y);
        if (lay.model == DistanceModel::PaperFaithful && site.role == PdRole::Edge)
            distance = kSqrt3 * site.ring * lay.rho;
        else if (lay.model == DistanceModel::PaperFaithful && site.role == PdRole::Corner)
            distance = 2.0 * site.ring * lay.rho;
        os << index++ << ',' << format::number(site.x) << ',' << format::number(site.y) << ','
           << format::number(distance) << ',' << to_string(site.role) << ',' << site.ring << '\n';
    }
}

} // namespace pdarray::hexgeom
