#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "poincare1d/group.hpp"
#include "poincare1d/realization.hpp"
#include "poincare1d/types.hpp"

namespace poincare1d {

/// Galilean group multiplication (v + v', tau + tau', v tau' + x' + x).
/// Agrees bit-for-bit with compose() in the Galilean regime; implemented
/// independently so that agreement is a cross-check of two code paths.
inline GroupElement galilei_compose(const GroupElement& g1, const GroupElement& g2) {
    return {g1.v + g2.v, g2.tau + g1.tau, g1.v * g2.tau + g2.x + g1.x};
}

/// Galilean inverse (-v, -tau, v tau - x).
inline GroupElement galilei_inverse(const GroupElement& g) {
    return {-g.v, -g.tau, g.v * g.tau - g.x};
}

/// Galilean space-time action (t + tau, v t + q + x).
inline SpacetimePoint galilei_spacetime_action(const GroupElement& g, const SpacetimePoint& pt) {
    return {pt.t + g.tau, g.v * pt.t + pt.q + g.x};
}

/// Galilean Darboux-chart action (p + f tau, (v/f) p + q + x); the linear
/// part is a unit-determinant shear.
inline PhasePoint galilei_phase_action(const GroupElement& g, const PhasePoint& pt, double f) {
    detail::require_nondegenerate(f, "galilei_phase_action");
    return {pt.p + f * g.tau, (g.v / f) * pt.p + pt.q + g.x};
}

/// Which operation a contraction-rate measurement compares against its
/// Galilean closed form.
enum class ContractionOp { Compose, Spacetime, Phase };

/// Fixed input set for contraction-rate measurements. Velocities are sampled
/// on the Galilean scale so that every admissibility constraint is governed
/// by the c grid, not the sample.
struct ContractionSample {
    std::vector<GroupElement> elements;        ///< the acting elements
    std::vector<GroupElement> partners;        ///< right factors for Compose
    std::vector<SpacetimePoint> spacetime_points;
    std::vector<PhasePoint> phase_points;
    std::vector<double> forces;                ///< |f| >= 0.1, for Phase

    std::size_t size() const { return elements.size(); }
    double max_speed() const;
};

/// Deterministic sample of `n` inputs from `seed`; with `zero_boosts` every
/// velocity is zero, which makes the finite-c and Galilean operations agree
/// identically (the degenerate case).
ContractionSample make_contraction_sample(std::uint64_t seed, std::size_t n,
                                          bool zero_boosts = false);

/// Result of a contraction-rate measurement: per-c sup-norm deviation
/// between the finite-c operation and its Galilean closed form, plus the
/// least-squares slope of log(deviation) against log(c). The slope is
/// absent when any deviation vanishes (degenerate sample).
struct ContractionReport {
    std::vector<double> c_grid;
    std::vector<double> deviations;
    std::optional<double> fitted_slope;
    bool degenerate_sample = false;
};

/// Measure how fast the finite-c operation approaches its Galilean limit
/// along `c_grid`. The grid must be strictly increasing and every entry must
/// exceed the largest sampled speed (InvalidGrid otherwise). For a
/// nondegenerate sample the deviations fall off as 1/c^2: fitted slope -2.
ContractionReport contraction_rate(ContractionOp op, const ContractionSample& sample,
                                   const std::vector<double>& c_grid);

}  // namespace poincare1d
