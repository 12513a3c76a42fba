#include <doctest.h>

#include <cmath>
#include <vector>

#include "poincare1d/contraction.hpp"

using namespace poincare1d;

namespace {
const KinematicParams kGal = KinematicParams::galilean();
}

TEST_CASE("Galilei closed forms: worked examples") {
    SUBCASE("compose") {
        const GroupElement g = galilei_compose(GroupElement{1.0, 0.0, 0.0},
                                               GroupElement{0.0, 2.0, 0.0});
        CHECK(g.v == 1.0);
        CHECK(g.tau == 2.0);
        CHECK(g.x == 2.0);  // the boost carries the translated clock
    }

    SUBCASE("inverse") {
        const GroupElement inv = galilei_inverse(GroupElement{2.0, 3.0, 4.0});
        CHECK(inv.v == -2.0);
        CHECK(inv.tau == -3.0);
        CHECK(inv.x == 2.0);  // v tau - x

        const GroupElement prod = galilei_compose(GroupElement{2.0, 3.0, 4.0}, inv);
        CHECK(prod.v == 0.0);
        CHECK(prod.tau == 0.0);
        CHECK(prod.x == 0.0);
    }

    SUBCASE("space-time action") {
        const SpacetimePoint out =
            galilei_spacetime_action(GroupElement{2.0, 3.0, 4.0}, SpacetimePoint{5.0, 6.0});
        CHECK(out.t == 8.0);
        CHECK(out.q == 20.0);
    }

    SUBCASE("phase action: time translation leaves q alone") {
        const PhasePoint out =
            galilei_phase_action(GroupElement{0.0, 3.0, 0.0}, PhasePoint{2.0, 5.0}, 7.0);
        CHECK(out.p == 23.0);
        CHECK(out.q == 5.0);
    }

    SUBCASE("phase action: boost feeds position from momentum") {
        const PhasePoint out =
            galilei_phase_action(GroupElement{2.0, 0.0, 0.0}, PhasePoint{6.0, 5.0}, 3.0);
        CHECK(out.p == 6.0);
        CHECK(out.q == 9.0);  // v p / f + q
    }

    CHECK_THROWS_AS(galilei_phase_action(GroupElement::identity(), PhasePoint{1.0, 1.0}, 0.0),
                    DegenerateOrbit);
}

TEST_CASE("closed forms agree bitwise with the generic operations at 1/c^2 = 0") {
    const ContractionSample sample = make_contraction_sample(11, 64);
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const GroupElement& g = sample.elements[i];
        const GroupElement& h = sample.partners[i];

        const GroupElement c1 = compose(g, h, kGal);
        const GroupElement c2 = galilei_compose(g, h);
        CHECK(c1.v == c2.v);
        CHECK(c1.tau == c2.tau);
        CHECK(c1.x == c2.x);

        const GroupElement i1 = inverse(g, kGal);
        const GroupElement i2 = galilei_inverse(g);
        CHECK(i1.tau == i2.tau);
        CHECK(i1.x == i2.x);

        const SpacetimePoint s1 = spacetime_action(g, sample.spacetime_points[i], kGal);
        const SpacetimePoint s2 = galilei_spacetime_action(g, sample.spacetime_points[i]);
        CHECK(s1.t == s2.t);
        CHECK(s1.q == s2.q);

        const PhasePoint p1 = phase_action(g, sample.phase_points[i], sample.forces[i], kGal);
        const PhasePoint p2 = galilei_phase_action(g, sample.phase_points[i], sample.forces[i]);
        CHECK(p1.p == p2.p);
        CHECK(p1.q == p2.q);
    }
}

TEST_CASE("contraction samples") {
    const ContractionSample a = make_contraction_sample(7, 20);
    const ContractionSample b = make_contraction_sample(7, 20);
    const ContractionSample c = make_contraction_sample(8, 20);

    CHECK(a.size() == 20);
    CHECK(a.partners.size() == 20);
    CHECK(a.forces.size() == 20);

    SUBCASE("deterministic in the seed") {
        bool identical = true;
        for (std::size_t i = 0; i < a.size(); ++i)
            identical = identical && a.elements[i].v == b.elements[i].v &&
                        a.elements[i].tau == b.elements[i].tau &&
                        a.phase_points[i].q == b.phase_points[i].q;
        CHECK(identical);
        CHECK(a.elements[0].v != c.elements[0].v);
    }

    SUBCASE("speeds live on the Galilean scale") {
        CHECK(a.max_speed() > 0.0);
        CHECK(a.max_speed() <= 10.0);
    }

    SUBCASE("forces stay away from the degenerate orbit") {
        for (const double f : a.forces) CHECK(std::abs(f) >= 0.1);
    }

    SUBCASE("zero_boosts freezes every velocity") {
        const ContractionSample z = make_contraction_sample(7, 20, true);
        CHECK(z.max_speed() == 0.0);
        for (const GroupElement& g : z.partners) CHECK(g.v == 0.0);
    }
}

TEST_CASE("contraction rate") {
    const ContractionSample sample = make_contraction_sample(42, 400);
    const std::vector<double> grid{1e2, 1e3, 1e4, 1e5, 1e6};

    SUBCASE("all three operations contract at second order") {
        for (const ContractionOp op :
             {ContractionOp::Compose, ContractionOp::Spacetime, ContractionOp::Phase}) {
            const ContractionReport report = contraction_rate(op, sample, grid);
            CHECK_FALSE(report.degenerate_sample);
            REQUIRE(report.fitted_slope.has_value());
            CHECK(std::abs(*report.fitted_slope + 2.0) <= 0.1);
            for (std::size_t i = 1; i < report.deviations.size(); ++i)
                CHECK(report.deviations[i] < report.deviations[i - 1]);
        }
    }

    SUBCASE("a boost-free sample is flagged, not fitted") {
        const ContractionSample still = make_contraction_sample(42, 400, true);
        const ContractionReport report = contraction_rate(ContractionOp::Compose, still, grid);
        CHECK(report.degenerate_sample);
        CHECK_FALSE(report.fitted_slope.has_value());
        for (const double dev : report.deviations) CHECK(dev == 0.0);
    }

    SUBCASE("invalid grids are rejected") {
        CHECK_THROWS_AS(contraction_rate(ContractionOp::Compose, sample, {}), InvalidGrid);
        CHECK_THROWS_AS(contraction_rate(ContractionOp::Compose, sample, {1e3, 1e2}),
                        InvalidGrid);
        CHECK_THROWS_AS(contraction_rate(ContractionOp::Compose, sample, {1e3, 1e3}),
                        InvalidGrid);
        // Every grid speed must clear the sample's own velocities.
        CHECK_THROWS_AS(
            contraction_rate(ContractionOp::Compose, sample, {sample.max_speed(), 1e3}),
            InvalidGrid);
    }
}
