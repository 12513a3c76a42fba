#include <doctest.h>

#include <algorithm>
#include <cmath>

#include <Eigen/LU>

#include "poincare1d/numdiff.hpp"
#include "poincare1d/realization.hpp"

using namespace poincare1d;

namespace {
const KinematicParams kUnit = KinematicParams::speed_of_light(1.0);
const KinematicParams kHalf = KinematicParams::speed_of_light(2.0);
const KinematicParams kGal = KinematicParams::galilean();
}  // namespace

TEST_CASE("chart map between dual points and coordinates") {
    const DualVector mu{1.0, -2.0, 3.0, 1.0};
    const OrbitCoordinates coords = darboux_from_dual(mu);
    CHECK(coords.t == 3.0);
    CHECK(coords.q == 2.0);
    CHECK(coords.p == 3.0);
    CHECK(coords.phase().p == 3.0);
    CHECK(coords.spacetime().t == 3.0);
    CHECK(coords.spacetime().q == 2.0);

    CHECK_THROWS_AS(darboux_from_dual(DualVector{1.0, 2.0, 3.0, 0.0}), DegenerateOrbit);

    SUBCASE("inverse chart lands back on the same dual point") {
        const OrbitInvariants inv = casimir(mu, kUnit);
        const DualVector back = dual_from_darboux(inv, coords.phase(), kUnit);
        CHECK(back.k == doctest::Approx(mu.k).epsilon(1e-15));
        CHECK(back.e == mu.e);
        CHECK(back.p == mu.p);
        CHECK(back.f == mu.f);
    }
}

TEST_CASE("phase-chart action") {
    SUBCASE("time translation feeds the momentum") {
        const PhasePoint out =
            phase_action(GroupElement{0.0, 3.0, 0.0}, PhasePoint{2.0, 5.0}, 7.0, kUnit);
        CHECK(out.p == 23.0);  // p + f tau
        CHECK(out.q == 5.0);
    }

    SUBCASE("space translation moves only the position") {
        const PhasePoint out =
            phase_action(GroupElement{0.0, 0.0, 4.0}, PhasePoint{2.0, 5.0}, 7.0, kUnit);
        CHECK(out.p == 2.0);
        CHECK(out.q == 9.0);
    }

    SUBCASE("boost mixes the pair through gamma") {
        const PhasePoint out =
            phase_action(GroupElement{0.6, 0.0, 0.0}, PhasePoint{1.0, 1.0}, 2.0, kUnit);
        CHECK(out.p == doctest::Approx(2.75).epsilon(1e-15));   // 1.25 + 1.25*2*0.6
        CHECK(out.q == doctest::Approx(1.625).epsilon(1e-15));  // 1.25*0.3 + 1.25
    }

    CHECK_THROWS_AS(phase_action(GroupElement::identity(), PhasePoint{1.0, 1.0}, 0.0, kUnit),
                    DegenerateOrbit);
}

TEST_CASE("space-time chart action") {
    const GroupElement g{0.6, 1.0, 2.0};

    SUBCASE("worked example at c = 1") {
        const SpacetimePoint out = spacetime_action(g, SpacetimePoint{1.0, 1.0}, kUnit);
        CHECK(out.t == doctest::Approx(3.0).epsilon(1e-15));  // 1.25 + 0.75 + 1
        CHECK(out.q == doctest::Approx(4.0).epsilon(1e-15));  // 0.75 + 1.25 + 2
    }

    SUBCASE("Galilean shear never touches time with position") {
        const SpacetimePoint out =
            spacetime_action(GroupElement{2.0, 3.0, 4.0}, SpacetimePoint{5.0, 6.0}, kGal);
        CHECK(out.t == 8.0);
        CHECK(out.q == 20.0);  // 2*5 + 6 + 4
    }

    SUBCASE("the two charts transport the same orbit point") {
        const DualVector mu{1.0, -2.0, 3.0, 1.0};
        const GroupElement h{0.35, -0.7, 1.3};
        const OrbitCoordinates before = darboux_from_dual(mu);
        const PhasePoint moved_phase = phase_action(h, before.phase(), mu.f, kUnit);
        const SpacetimePoint moved_st = spacetime_action(h, before.spacetime(), kUnit);
        CHECK(moved_phase.p / mu.f == doctest::Approx(moved_st.t).epsilon(1e-14));
        CHECK(moved_phase.q == doctest::Approx(moved_st.q).epsilon(1e-14));
    }
}

TEST_CASE("interval") {
    const SpacetimePoint a{3.0, 4.0};
    const SpacetimePoint origin{0.0, 0.0};

    CHECK(interval(a, origin, kUnit) == -7.0);  // -16 + 9
    CHECK(interval(a, origin, kHalf) == 20.0);  // -16 + 4*9
    CHECK(interval(origin, a, kUnit) == interval(a, origin, kUnit));

    SUBCASE("invariant under the action") {
        const GroupElement g{0.6, 1.0, 2.0};
        const SpacetimePoint b{-1.0, 2.5};
        const double before = interval(a, b, kUnit);
        const double after = interval(spacetime_action(g, a, kUnit),
                                      spacetime_action(g, b, kUnit), kUnit);
        CHECK(after == doctest::Approx(before).epsilon(1e-13));
    }

    CHECK_THROWS_AS(interval(a, origin, kGal), GalileanRegime);
}

TEST_CASE("action Jacobians") {
    SUBCASE("identity element gives the identity matrix") {
        const ActionJacobian jac =
            action_jacobian(GroupElement::identity(), 3.0, kUnit, Chart::Phase);
        CHECK((jac - ActionJacobian::Identity()).isZero(0.0));
    }

    SUBCASE("frozen entries for a boost") {
        const ActionJacobian jac =
            action_jacobian(GroupElement{0.6, 1.0, 2.0}, 2.0, kUnit, Chart::Phase);
        CHECK(jac(0, 0) == doctest::Approx(1.25).epsilon(1e-15));
        CHECK(jac(0, 1) == doctest::Approx(1.5).epsilon(1e-15));    // gamma f v
        CHECK(jac(1, 0) == doctest::Approx(0.375).epsilon(1e-15));  // gamma v / f
        CHECK(jac(1, 1) == doctest::Approx(1.25).epsilon(1e-15));
    }

    SUBCASE("unit determinant in both charts") {
        const GroupElement g{-0.83, 0.4, -1.9};
        for (const Chart chart : {Chart::Phase, Chart::Spacetime}) {
            const double det = action_jacobian(g, 0.7, kUnit, chart).determinant();
            CHECK(std::abs(det - 1.0) <= 1e-12);
        }
        const double gal_det =
            action_jacobian(GroupElement{5.0, 1.0, 2.0}, 0.7, kGal, Chart::Spacetime)
                .determinant();
        CHECK(gal_det == 1.0);
    }

    SUBCASE("translations do not enter the linear part") {
        const ActionJacobian with = action_jacobian(GroupElement{0.3, 5.0, -7.0}, 1.0,
                                                    kUnit, Chart::Spacetime);
        const ActionJacobian without = action_jacobian(GroupElement{0.3, 0.0, 0.0}, 1.0,
                                                       kUnit, Chart::Spacetime);
        CHECK((with - without).isZero(0.0));
    }

    CHECK_THROWS_AS(action_jacobian(GroupElement::identity(), 0.0, kUnit, Chart::Phase),
                    DegenerateOrbit);
}

TEST_CASE("finite differences recover the phase Jacobian") {
    const GroupElement g{0.6, 1.0, 2.0};
    const PhasePoint pt{1.3, -0.8};

    for (const KinematicParams& params :
         {kUnit, KinematicParams::speed_of_light(3e8), kGal}) {
        const Mat2 closed = action_jacobian(g, 2.0, params, Chart::Phase);
        const Mat2 fd = phase_jacobian_fd(g, pt, 2.0, params);
        const double scale = std::max({1.0, closed.cwiseAbs().maxCoeff(),
                                       fd.cwiseAbs().maxCoeff()});
        CHECK((fd - closed).cwiseAbs().maxCoeff() / scale <= 1e-8);
    }
}
