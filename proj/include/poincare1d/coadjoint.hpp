#pragma once

#include <cmath>

#include "poincare1d/group.hpp"
#include "poincare1d/types.hpp"

namespace poincare1d {

/// Point of the dual of the extended algebra, written in the conventional
/// argument order (k, e, p, f). Pairing with algebra elements is by label,
/// not by position: k pairs with K, p with P, e with E, f with F.
struct DualVector {
    double k = 0.0;  ///< moment dual to the boost generator K
    double e = 0.0;  ///< moment dual to the time-translation generator E
    double p = 0.0;  ///< moment dual to the space-translation generator P
    double f = 0.0;  ///< moment dual to the central generator F (the force)
};

/// The two functions constant on a coadjoint orbit: the central moment f and
/// the Casimir value.
struct OrbitInvariants {
    double f = 0.0;
    double casimir = 0.0;
};

/// Antisymmetric matrix of coordinate Poisson brackets restricted to the
/// non-central directions, rows and columns ordered (K, E, P).
using KirillovMatrix = Mat3;

/// Natural pairing <mu, a> between the dual space and the algebra; pairs
/// coordinates with basis coefficients by label.
inline double pairing(const DualVector& mu, const AlgebraElement& a) {
    return mu.k * a.coeff(Basis::K) + mu.p * a.coeff(Basis::P) +
           mu.e * a.coeff(Basis::E) + mu.f * a.coeff(Basis::F);
}

namespace detail {

inline void require_nondegenerate(double f, const char* where) {
    if (f == 0.0)
        throw DegenerateOrbit(std::string(where) + ": orbit chart is undefined for f = 0");
}

}  // namespace detail

/// Coadjoint action of a group element on the dual of the extended algebra.
/// Satisfies the left-action law Ad*_{g1 g2} = Ad*_{g1} o Ad*_{g2} (verified
/// by the `coadjoint.action.left_composition` property) and fixes f.
inline DualVector coadjoint_action(const GroupElement& g, const DualVector& mu,
                                   const KinematicParams& params) {
    const double gam = gamma_factor(g.v, params);
    const double ic2 = params.inv_c2();
    return {mu.k + gam * (g.x - g.v * g.tau) * mu.e * ic2 +
                gam * (g.tau - g.v * g.x * ic2) * mu.p +
                0.5 * (g.tau * g.tau - g.x * g.x * ic2) * mu.f,
            gam * mu.e - gam * mu.p * g.v - mu.f * g.x,
            -gam * g.v * mu.e * ic2 + gam * mu.p + mu.f * g.tau,
            mu.f};
}

/// Kirillov form at mu over the ordered non-central directions (K, E, P):
///
///     [ 0       -p      -e/c^2 ]
///     [ p        0       f     ]
///     [ e/c^2   -f       0     ]
///
/// Entries are linear in mu; the matrix is antisymmetric and has rank 2
/// whenever (p, e/c^2, f) != 0.
inline KirillovMatrix kirillov_matrix(const DualVector& mu, const KinematicParams& params) {
    const double a = mu.p;
    const double b = mu.e * params.inv_c2();
    const double c = mu.f;
    KirillovMatrix m;
    m << 0.0, -a, -b,
         a, 0.0, c,
         b, -c, 0.0;
    return m;
}

/// Null direction of the Kirillov form, coefficients over (K, E, P).
/// kirillov_matrix(mu) * kirillov_kernel(mu) vanishes identically, and the
/// gradient of the Casimir is parallel to this vector.
inline Vec3 kirillov_kernel(const DualVector& mu, const KinematicParams& params) {
    return Vec3(-mu.f, -mu.e * params.inv_c2(), mu.p);
}

/// Orbit invariants (f, Casimir) of a dual point, evaluated through the
/// orbit chart t = p/f, q = -e/f:
///
///     Casimir = k + f q^2/(2 c^2) - f t^2/2
///
/// Throws DegenerateOrbit when f = 0 (the chart divides by f).
inline OrbitInvariants casimir(const DualVector& mu, const KinematicParams& params) {
    detail::require_nondegenerate(mu.f, "casimir");
    const double t = mu.p / mu.f;
    const double q = -mu.e / mu.f;
    return {mu.f, mu.k + 0.5 * mu.f * q * q * params.inv_c2() - 0.5 * mu.f * t * t};
}

/// Reconstruct the dual point on the orbit labelled by `inv` whose chart
/// coordinates are (p, q): e = -f q and k solves the Casimir relation.
/// Inverse of `casimir` composed with the chart.
inline DualVector orbit_point(const OrbitInvariants& inv, double p, double q,
                              const KinematicParams& params) {
    detail::require_nondegenerate(inv.f, "orbit_point");
    const double k = inv.casimir - 0.5 * inv.f * q * q * params.inv_c2() + p * p / (2.0 * inv.f);
    return {k, -inv.f * q, p, inv.f};
}

/// Lie-Poisson bracket of two functions on the dual space, given their
/// differentials at mu as algebra elements: {F, G}(mu) = <mu, [dF, dG]>.
inline double lie_poisson_bracket(const AlgebraElement& grad_f, const AlgebraElement& grad_g,
                                  const DualVector& mu, const KinematicParams& params) {
    return pairing(mu, bracket(grad_f, grad_g, params));
}

}  // namespace poincare1d
