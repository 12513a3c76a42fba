#pragma once

#include <algorithm>
#include <cmath>

#include "poincare1d/coadjoint.hpp"
#include "poincare1d/realization.hpp"

namespace poincare1d {

/// Step size for central differences, scaled to the coordinate magnitude.
inline double fd_step(double x) { return 1e-6 * std::max(1.0, std::abs(x)); }

/// Central difference of a scalar function of one double.
template <typename F>
double central_difference(F&& func, double x) {
    const double h = fd_step(x);
    return (func(x + h) - func(x - h)) / (2.0 * h);
}

/// Gradient of the Casimir in the dual coordinates, assembled as an algebra
/// element (d/dk -> K, d/dp -> P, d/de -> E, d/df -> F). Purely numerical;
/// serves as an oracle independent of the closed-form Casimir geometry.
inline AlgebraElement casimir_gradient_fd(const DualVector& mu, const KinematicParams& params) {
    auto value = [&params](const DualVector& point) {
        return casimir(point, params).casimir;
    };
    auto partial = [&](double DualVector::* member) {
        return central_difference(
            [&](double coord) {
                DualVector shifted = mu;
                shifted.*member = coord;
                return value(shifted);
            },
            mu.*member);
    };
    return AlgebraElement(partial(&DualVector::k), partial(&DualVector::p),
                          partial(&DualVector::e), partial(&DualVector::f));
}

/// Jacobian of the Darboux-chart action at `pt`, by central differences in
/// each of (p, q). The action is affine in the point, so widening the step
/// to the scale of the image costs no truncation error while keeping the
/// difference quotient above the rounding floor of large image coordinates
/// (which grow like gamma v/f for fast boosts).
inline Mat2 phase_jacobian_fd(const GroupElement& g, const PhasePoint& pt, double f,
                              const KinematicParams& params) {
    const PhasePoint image = phase_action(g, pt, f, params);
    const double image_scale = std::max(std::abs(image.p), std::abs(image.q));
    auto column = [&](double PhasePoint::* member, int col, Mat2& jac) {
        const double h = std::max(fd_step(pt.*member), 1e-6 * image_scale);
        PhasePoint plus = pt;
        plus.*member += h;
        PhasePoint minus = pt;
        minus.*member -= h;
        const double step = plus.*member - minus.*member;
        const PhasePoint fp = phase_action(g, plus, f, params);
        const PhasePoint fm = phase_action(g, minus, f, params);
        jac(0, col) = (fp.p - fm.p) / step;
        jac(1, col) = (fp.q - fm.q) / step;
    };
    Mat2 jac;
    column(&PhasePoint::p, 0, jac);
    column(&PhasePoint::q, 1, jac);
    return jac;
}

}  // namespace poincare1d
