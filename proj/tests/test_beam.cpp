#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "pdarray/beam.hpp"
#include "pdarray/errors.hpp"
#include "pdarray/quadrature.hpp"
#include "pdarray/specfun.hpp"

using namespace pdarray;
using doctest::Approx;

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;
}

TEST_CASE("intensity profiles") {
    const auto gauss = beam::BeamPattern::gaussian();
    const auto lg = beam::BeamPattern::lg10();
    CHECK(beam::intensity(lg, 0.0) == 0.0);                          // central vortex
    CHECK(beam::intensity(gauss, 0.0) == Approx(2.0 / kPi));         // unit-power peak
    CHECK_THROWS_AS(beam::intensity(beam::BeamPattern::uniform(), 0.5), std::domain_error);
    CHECK_THROWS_AS(beam::intensity(beam::BeamPattern::degenerate(), 0.5), std::domain_error);

    // the full-plane integral of each profile is 1
    for (const auto& pat : {gauss, lg}) {
        const auto f = [&](double r) { return 2.0 * kPi * r * beam::intensity(pat, r); };
        CHECK(quadrature::integrate(f, 0.0, 12.0, 1e-12, 1e-14, 2000) == Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("cumulative LG10 capture matches its closed form") {
    const auto lg = beam::BeamPattern::lg10();
    for (double radius : {0.3, 0.8, 1.5}) {
        const auto f = [&](double r) { return 2.0 * kPi * r * beam::intensity(lg, r); };
        const double cumulative = quadrature::integrate(f, 0.0, radius, 1e-12, 1e-16, 2000);
        const double x = 2.0 * radius * radius;
        CHECK(cumulative == Approx(1.0 - std::exp(-x) - x * std::exp(-x)).epsilon(1e-10));
        CHECK(beam::lg10_disk_capture(radius) == Approx(cumulative).epsilon(1e-10));
    }
}

TEST_CASE("degenerate and uniform profiles bypass geometry") {
    const auto lay = hexgeom::layout(3, 0.5);
    const auto degen = beam::capture_profile(beam::BeamPattern::degenerate(), lay);
    const auto unif = beam::capture_profile(beam::BeamPattern::uniform(), lay);

    const auto degenExpanded = degen.expanded();
    REQUIRE(degenExpanded.size() == 37);
    CHECK(degenExpanded[0] == 1.0);
    CHECK(std::accumulate(degenExpanded.begin(), degenExpanded.end(), 0.0) == 1.0);

    const auto unifExpanded = unif.expanded();
    for (double f : unifExpanded) CHECK(f == Approx(1.0 / 37.0));
    CHECK(unif.total_fraction == Approx(1.0).epsilon(1e-12));

    const auto lay7 = hexgeom::layout(1, 1.0);
    const auto unif7 = beam::capture_profile(beam::BeamPattern::uniform(), lay7);
    for (double f : unif7.expanded()) CHECK(f == Approx(1.0 / 7.0));
}

TEST_CASE("gaussian closed-form fractions: anchors") {
    // G = 0: numerator equals denominator
    const auto lay0 = hexgeom::layout(0, 0.7);
    CHECK(beam::captured_fraction_closed(beam::BeamPattern::gaussian(), lay0,
                                         hexgeom::PdRole::Central, 0) == Approx(1.0));

    // G=3, rho=0.5, ring-1 corner: (1 - Q1(2,1)) / (1 - e^{-8}); golden from
    // the high-precision series oracle
    const auto lay = hexgeom::layout(3, 0.5);
    const double frac = beam::captured_fraction_closed(beam::BeamPattern::gaussian(), lay,
                                                       hexgeom::PdRole::Corner, 1);
    CHECK(frac == Approx(0.081919784656832185).epsilon(1e-12));

    // LG10 central for the same layout
    const double lgc = beam::captured_fraction_closed(beam::BeamPattern::lg10(), lay,
                                                      hexgeom::PdRole::Central, 0);
    CHECK(lgc == Approx(0.09047717583157679).epsilon(1e-12));
}

TEST_CASE("waist inside the central PD concentrates the gaussian capture") {
    const auto lay = hexgeom::layout(1, 2.0);
    const auto profile = beam::capture_profile(beam::BeamPattern::gaussian(), lay,
                                               beam::Normalization::ArraySum);
    CHECK(profile.groups[0].role == hexgeom::PdRole::Central);
    CHECK(profile.groups[0].fraction > 0.999);
}

TEST_CASE("profile fractions expand by multiplicity and match the closed forms") {
    const auto lay = hexgeom::layout(3, 0.5);
    for (const auto kind : {beam::BeamKind::Gaussian, beam::BeamKind::Lg10}) {
        const auto profile = beam::capture_profile({kind, 0.0}, lay);
        for (const auto& grp : profile.groups) {
            const double direct = beam::captured_fraction_closed({kind, 0.0}, lay, grp.role,
                                                                 grp.ring);
            CHECK(grp.fraction == Approx(direct).epsilon(1e-14));
        }
        CHECK(profile.expanded().size() == 37);
    }
}

TEST_CASE("array-sum normalization sums to one") {
    for (int g : {1, 3}) {
        for (double rho : {0.1, 0.5, 2.0}) {
            const auto lay = hexgeom::layout(g, rho);
            for (const auto kind : {beam::BeamKind::Gaussian, beam::BeamKind::Lg10}) {
                const auto profile =
                    beam::capture_profile({kind, 0.0}, lay, beam::Normalization::ArraySum);
                CHECK(profile.total_fraction == Approx(1.0).epsilon(1e-12));
                for (const auto& grp : profile.groups) {
                    CHECK(grp.fraction >= 0.0);
                    CHECK(grp.fraction <= 1.0);
                }
            }
        }
    }
}

TEST_CASE("reference-disk fractions behave when the beam is contained") {
    // once rho >= 1 the reference disk holds essentially all the power and
    // the multiplicity-weighted sum cannot exceed 1 by more than rounding
    for (double rho : {1.0, 2.0}) {
        const auto lay = hexgeom::layout(3, rho);
        for (const auto kind : {beam::BeamKind::Gaussian, beam::BeamKind::Lg10}) {
            const auto profile = beam::capture_profile({kind, 0.0}, lay);
            CHECK(profile.total_fraction <= 1.0 + 1e-9);
            for (const auto& grp : profile.groups) CHECK(grp.fraction <= 1.0);
        }
    }
}

TEST_CASE("LG10 central fraction sits below the gaussian one") {
    for (int g : {1, 2, 5}) {
        for (double rho : {0.1, 0.5, 1.0, 2.0}) {
            const auto lay = hexgeom::layout(g, rho);
            const double fg = beam::captured_fraction_closed(beam::BeamPattern::gaussian(), lay,
                                                             hexgeom::PdRole::Central, 0);
            const double fl = beam::captured_fraction_closed(beam::BeamPattern::lg10(), lay,
                                                             hexgeom::PdRole::Central, 0);
            CHECK(fl < fg);
        }
    }
}

TEST_CASE("gaussian fractions decay with ring index") {
    const auto lay = hexgeom::layout(5, 0.4);
    const auto profile = beam::capture_profile(beam::BeamPattern::gaussian(), lay);
    double prevCorner = 2.0;
    for (const auto& grp : profile.groups) {
        if (grp.role != hexgeom::PdRole::Corner) continue;
        CHECK(grp.fraction < prevCorner);
        prevCorner = grp.fraction;
    }
}

TEST_CASE("closed-form errors") {
    const auto lay = hexgeom::layout(2, 0.5);
    CHECK_THROWS_AS(beam::captured_fraction_closed(beam::BeamPattern::uniform(), lay,
                                                   hexgeom::PdRole::Central, 0),
                    std::invalid_argument);
    const auto exact = hexgeom::layout(2, 0.5, hexgeom::DistanceModel::ExactLattice);
    CHECK_THROWS_AS(beam::captured_fraction_closed(beam::BeamPattern::gaussian(), exact,
                                                   hexgeom::PdRole::Central, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(beam::captured_fraction_closed(beam::BeamPattern::gaussian(), lay,
                                                   hexgeom::PdRole::Edge, 1),
                    std::invalid_argument);
    // denominator underflow carries guidance
    const auto tiny = hexgeom::layout(1, 1e-80);
    CHECK_THROWS_AS(beam::capture_profile(beam::BeamPattern::lg10(), tiny), NumericalError);
    // inconsistent waist vs layout
    CHECK_THROWS_AS(beam::capture_profile(beam::BeamPattern::gaussian(3.0), lay),
                    std::invalid_argument);
    CHECK_NOTHROW(beam::capture_profile(beam::BeamPattern::gaussian(2.0), lay)); // 1/rho
}

TEST_CASE("profile CSV export") {
    const auto lay = hexgeom::layout(1, 0.5);
    const auto profile = beam::capture_profile(beam::BeamPattern::gaussian(), lay);
    std::ostringstream os;
    beam::write_profile_csv(os, profile);
    const std::string csv = os.str();
    CHECK(csv.rfind("index,ring,role,fraction", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 8); // header + 7 PDs
}
