#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>
#include <vector>

#include "pdarray/hexgeom.hpp"
#include "test_util.hpp"

using namespace pdarray::hexgeom;
using doctest::Approx;

TEST_CASE("array_size formula") {
    CHECK(array_size(0) == 1);
    CHECK(array_size(1) == 7);
    CHECK(array_size(3) == 37);
    CHECK(array_size(10) == 331);
}

TEST_CASE("rings_for inverts array_size and rejects non-hexagonal M") {
    CHECK(rings_for(1) == 0);
    CHECK(rings_for(7) == 1);
    CHECK(rings_for(37) == 3);
    CHECK(!rings_for(10).has_value());
    CHECK(!rings_for(2).has_value());
    CHECK(!rings_for(0).has_value());
    for (int g = 0; g <= 200; ++g) CHECK(rings_for(array_size(g)) == g);
}

TEST_CASE("nearest_valid_m") {
    CHECK(nearest_valid_m(10) == 7);
    CHECK(nearest_valid_m(1) == 1);
    CHECK(nearest_valid_m(18) == 19);
    CHECK(nearest_valid_m(37) == 37);
}

TEST_CASE("paper-faithful layout distances") {
    const auto lay = layout(1, 0.5);
    REQUIRE(lay.groups.size() == 2);
    CHECK(lay.groups[0].role == PdRole::Central);
    CHECK(lay.groups[1].role == PdRole::Corner);
    CHECK(lay.groups[1].distance == Approx(1.0)); // 2 g rho = 2 * 1 * 0.5
    CHECK(lay.groups[1].multiplicity == 6);

    const auto lay3 = layout(3, 0.5);
    double cornerDist = 0.0, edgeDist = 0.0;
    int corners = 0, edges = 0;
    for (const auto& grp : lay3.groups) {
        if (grp.ring != 3) continue;
        if (grp.role == PdRole::Corner) {
            cornerDist = grp.distance;
            corners += grp.multiplicity;
        } else {
            edgeDist = grp.distance;
            edges += grp.multiplicity;
        }
    }
    CHECK(corners == 6);
    CHECK(edges == 12);
    CHECK(cornerDist == Approx(3.0));
    CHECK(edgeDist == Approx(std::sqrt(3.0) * 3 * 0.5)); // ~2.598
}

TEST_CASE("multiplicities sum to M for both models") {
    for (int g : {0, 1, 2, 3, 7, 12}) {
        for (auto model : {DistanceModel::PaperFaithful, DistanceModel::ExactLattice}) {
            const auto lay = layout(g, 0.37, model);
            long total = 0;
            for (const auto& grp : lay.groups) total += grp.multiplicity;
            CHECK(total == array_size(g));
        }
    }
}

TEST_CASE("ring role counts: 6 corners and 6g-6 edges") {
    const auto lay = layout(5, 0.2);
    std::map<int, std::pair<int, int>> counts; // ring -> (corners, edges)
    for (const auto& grp : lay.groups) {
        if (grp.role == PdRole::Corner) counts[grp.ring].first += grp.multiplicity;
        if (grp.role == PdRole::Edge) counts[grp.ring].second += grp.multiplicity;
    }
    for (int g = 1; g <= 5; ++g) {
        CHECK(counts[g].first == 6);
        CHECK(counts[g].second == 6 * g - 6);
    }
}

TEST_CASE("exact lattice agrees with brute-force coordinate enumeration") {
    for (int g : {1, 2, 3, 5}) {
        const double rho = 0.4;
        auto sites = pdarray::hexgeom::lattice_sites(g, rho);
        auto brute = testutil::brute_hex_sites(g, rho);
        REQUIRE(sites.size() == brute.size());
        // compare as sorted multisets of (x, y, ring, corner)
        auto key = [](double x, double y, int ring, bool corner) {
            return std::tuple(std::round(x * 1e9), std::round(y * 1e9), ring, corner);
        };
        std::vector<std::tuple<double, double, int, bool>> a, b;
        for (const auto& s : sites)
            a.push_back(key(s.x, s.y, s.ring, s.role == PdRole::Corner));
        for (const auto& s : brute) b.push_back(key(s.x, s.y, s.ring, s.corner));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
}

TEST_CASE("exact-lattice distances match coordinate norms, grouped") {
    const double rho = 0.3;
    for (int g : {2, 3, 4}) {
        const auto lay = layout(g, rho, DistanceModel::ExactLattice);
        const auto sites = lattice_sites(g, rho);
        // every group's distance must appear among site norms with matching count
        for (const auto& grp : lay.groups) {
            int matching = 0;
            for (const auto& s : sites)
                if (s.ring == grp.ring &&
                    std::fabs(std::hypot(s.x, s.y) - grp.distance) < 1e-12 &&
                    (s.role == grp.role))
                    ++matching;
            CHECK(matching == grp.multiplicity);
        }
    }
}

TEST_CASE("paper-faithful and exact-lattice agree on corners and ring 1") {
    for (int g : {1, 2, 3, 6}) {
        const auto paper = layout(g, 0.25, DistanceModel::PaperFaithful);
        const auto exact = layout(g, 0.25, DistanceModel::ExactLattice);
        for (const auto& pg : paper.groups) {
            if (pg.role != PdRole::Corner && pg.ring > 1) continue;
            bool found = false;
            for (const auto& eg : exact.groups)
                if (eg.ring == pg.ring && eg.role == pg.role &&
                    std::fabs(eg.distance - pg.distance) < 1e-12)
                    found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("exact lattice is a valid packing") {
    const double rho = 0.6;
    const int g = 4;
    const auto sites = lattice_sites(g, rho);
    double maxDist = 0.0;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        maxDist = std::max(maxDist, std::hypot(sites[i].x, sites[i].y));
        for (std::size_t j = i + 1; j < sites.size(); ++j) {
            const double d = std::hypot(sites[i].x - sites[j].x, sites[i].y - sites[j].y);
            CHECK(d >= 2.0 * rho - 1e-12); // non-overlapping disks
        }
    }
    // disks fit inside the array circumradius (2G+1) rho
    CHECK(maxDist + rho <= (2.0 * g + 1.0) * rho + 1e-12);
}

TEST_CASE("layout rejects bad input") {
    CHECK_THROWS_AS(layout(-1, 0.5), std::domain_error);
    CHECK_THROWS_AS(layout(2, 0.0), std::domain_error);
    CHECK_THROWS_AS(layout(2, -0.1), std::domain_error);
}

TEST_CASE("layout CSV dump shape") {
    const auto lay = layout(2, 0.5);
    std::ostringstream os;
    write_layout_csv(os, lay);
    const std::string csv = os.str();
    CHECK(csv.rfind("index,x,y,distance,role,ring", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + array_size(2));
}
