#pragma once

#include "poincare1d/coadjoint.hpp"
#include "poincare1d/group.hpp"
#include "poincare1d/types.hpp"

namespace poincare1d {

/// Darboux chart point (p, q); the symplectic form is dp ^ dq.
struct PhasePoint {
    double p = 0.0;
    double q = 0.0;
};

/// Space-time chart point (t, q); carries the weighted form f dt ^ dq.
struct SpacetimePoint {
    double t = 0.0;
    double q = 0.0;
};

/// Which affine chart an action Jacobian refers to.
enum class Chart { Phase, Spacetime };

/// Linear part of the affine chart action; unit determinant in both charts.
using ActionJacobian = Mat2;

/// Both charts' coordinates of a dual point on its orbit: the Darboux pair
/// (p, q) together with t = p/f.
struct OrbitCoordinates {
    double t = 0.0;
    double q = 0.0;
    double p = 0.0;

    PhasePoint phase() const { return {p, q}; }
    SpacetimePoint spacetime() const { return {t, q}; }
};

/// Chart map t = p/f, q = -e/f (p passes through). Throws DegenerateOrbit
/// when f = 0.
inline OrbitCoordinates darboux_from_dual(const DualVector& mu) {
    detail::require_nondegenerate(mu.f, "darboux_from_dual");
    return {mu.p / mu.f, -mu.e / mu.f, mu.p};
}

/// Chart inverse: the dual point on the orbit labelled by `inv` with Darboux
/// coordinates `pt`. Delegates to orbit_point.
inline DualVector dual_from_darboux(const OrbitInvariants& inv, const PhasePoint& pt,
                                    const KinematicParams& params) {
    return orbit_point(inv, pt.p, pt.q, params);
}

/// Affine action on the Darboux chart of the orbit with central moment f:
///
///     (p, q) -> (gamma p + gamma f v q/c^2 + f tau,  gamma (v/f) p + gamma q + x)
///
/// The dependence on f is explicit; the linear part has unit determinant.
inline PhasePoint phase_action(const GroupElement& g, const PhasePoint& pt, double f,
                               const KinematicParams& params) {
    detail::require_nondegenerate(f, "phase_action");
    const double gam = gamma_factor(g.v, params);
    return {gam * pt.p + gam * f * g.v * params.inv_c2() * pt.q + f * g.tau,
            gam * (g.v / f) * pt.p + gam * pt.q + g.x};
}

/// Affine action on the space-time chart, independent of f:
///
///     (t, q) -> (gamma t + gamma v q/c^2 + tau,  gamma v t + gamma q + x)
inline SpacetimePoint spacetime_action(const GroupElement& g, const SpacetimePoint& pt,
                                       const KinematicParams& params) {
    const double gam = gamma_factor(g.v, params);
    return {gam * pt.t + gam * g.v * params.inv_c2() * pt.q + g.tau,
            gam * g.v * pt.t + gam * pt.q + g.x};
}

/// Squared interval -(dq)^2 + c^2 (dt)^2 between two chart points; invariant
/// under the space-time action. Throws GalileanRegime when c is infinite
/// (the quadratic form degenerates as written).
inline double interval(const SpacetimePoint& a, const SpacetimePoint& b,
                       const KinematicParams& params) {
    if (params.is_galilean())
        throw GalileanRegime("interval: the quadratic form requires a finite speed of light");
    const double dt = a.t - b.t;
    const double dq = a.q - b.q;
    return -dq * dq + params.c() * params.c() * dt * dt;
}

/// Linear part of the affine chart action. Phase chart:
/// [[gamma, gamma f v/c^2], [gamma v/f, gamma]]; space-time chart:
/// [[gamma, gamma v/c^2], [gamma v, gamma]]. Both have determinant
/// gamma^2 (1 - v^2/c^2) = 1, which is the two-dimensional statement that
/// the action preserves dp ^ dq (respectively f dt ^ dq with f invariant).
inline ActionJacobian action_jacobian(const GroupElement& g, double f,
                                      const KinematicParams& params, Chart chart) {
    const double gam = gamma_factor(g.v, params);
    ActionJacobian jac;
    if (chart == Chart::Phase) {
        detail::require_nondegenerate(f, "action_jacobian");
        jac << gam, gam * f * g.v * params.inv_c2(),
               gam * (g.v / f), gam;
    } else {
        jac << gam, gam * g.v * params.inv_c2(),
               gam * g.v, gam;
    }
    return jac;
}

}  // namespace poincare1d
