#include "poincare1d/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>

#include <Eigen/LU>

#include "poincare1d/coadjoint.hpp"
#include "poincare1d/contraction.hpp"
#include "poincare1d/io.hpp"
#include "poincare1d/numdiff.hpp"
#include "poincare1d/realization.hpp"
#include "poincare1d/sampling.hpp"

namespace poincare1d {

namespace {

constexpr std::size_t kRateSampleSize = 24;
const std::vector<double>& rate_grid() {
    static const std::vector<double> grid{1e2, 1e3, 1e4, 1e5, 1e6};
    return grid;
}

std::uint64_t property_seed(std::uint64_t run_seed, const char* name) {
    return fnv1a64(name) ^ (run_seed * 0x9e3779b97f4a7c15ull);
}

double norm_inf(const GroupElement& g) {
    return std::max({std::abs(g.v), std::abs(g.tau), std::abs(g.x)});
}

double norm_inf(const ExtendedGroupElement& h) {
    return std::max({std::abs(h.v), std::abs(h.tau), std::abs(h.x), std::abs(h.zeta)});
}

double norm_inf(const DualVector& mu) {
    return std::max({std::abs(mu.k), std::abs(mu.e), std::abs(mu.p), std::abs(mu.f)});
}

double norm_inf(const PhasePoint& pt) { return std::max(std::abs(pt.p), std::abs(pt.q)); }

double norm_inf(const SpacetimePoint& pt) { return std::max(std::abs(pt.t), std::abs(pt.q)); }

double diff_inf(const GroupElement& a, const GroupElement& b) {
    return std::max({std::abs(a.v - b.v), std::abs(a.tau - b.tau), std::abs(a.x - b.x)});
}

double diff_inf(const ExtendedGroupElement& a, const ExtendedGroupElement& b) {
    return std::max({std::abs(a.v - b.v), std::abs(a.tau - b.tau), std::abs(a.x - b.x),
                     std::abs(a.zeta - b.zeta)});
}

double diff_inf(const DualVector& a, const DualVector& b) {
    return std::max({std::abs(a.k - b.k), std::abs(a.e - b.e), std::abs(a.p - b.p),
                     std::abs(a.f - b.f)});
}

double diff_inf(const PhasePoint& a, const PhasePoint& b) {
    return std::max(std::abs(a.p - b.p), std::abs(a.q - b.q));
}

double diff_inf(const SpacetimePoint& a, const SpacetimePoint& b) {
    return std::max(std::abs(a.t - b.t), std::abs(a.q - b.q));
}

/// Residual normalized by the size of the problem that produced it.
double scaled(double residual, double scale) { return residual / std::max(1.0, scale); }

class SuiteRunner {
  public:
    explicit SuiteRunner(const RunConfig& config) : config_(config) {}

    /// `body(sampler) -> deviation` is run once per case; the property's
    /// deviation is the worst case (NaN is sticky and fails).
    template <typename Body>
    void per_case(const char* name, double tol, Body&& body, const char* note = "") {
        Sampler sampler(property_seed(config_.seed, name));
        double worst = 0.0;
        bool saw_nan = false;
        for (std::size_t i = 0; i < config_.cases; ++i) {
            const double dev = body(sampler);
            if (std::isnan(dev))
                saw_nan = true;
            else
                worst = std::max(worst, dev);
        }
        push(name, config_.cases,
             saw_nan ? std::numeric_limits<double>::quiet_NaN() : worst, tol, note);
    }

    /// For properties that measure one aggregate quantity (a fit, a fixed
    /// table) rather than per-case deviations.
    template <typename Body>
    void once(const char* name, double tol, std::size_t reported_cases, Body&& body,
              const char* note = "") {
        push(name, reported_cases, body(), tol, note);
    }

    void skip(const char* name, const char* note) {
        PropertyResult result;
        result.name = name;
        result.status = PropertyResult::Status::Skip;
        result.note = note;
        results_.push_back(std::move(result));
    }

    std::vector<PropertyResult> take() {
        std::sort(results_.begin(), results_.end(),
                  [](const PropertyResult& a, const PropertyResult& b) { return a.name < b.name; });
        return std::move(results_);
    }

  private:
    void push(const char* name, std::size_t cases, double dev, double tol, const char* note) {
        PropertyResult result;
        result.name = name;
        result.cases = cases;
        result.max_dev = dev;
        result.tol = tol;
        result.status = dev <= tol ? PropertyResult::Status::Pass : PropertyResult::Status::Fail;
        result.note = note;
        results_.push_back(std::move(result));
    }

    const RunConfig& config_;
    std::vector<PropertyResult> results_;
};

}  // namespace

std::vector<PropertyResult> run_verification(const RunConfig& config) {
    if (config.cases == 0) throw std::invalid_argument("cases must be >= 1");
    if (!(config.tol.relative > 0.0) || !(config.tol.absolute > 0.0))
        throw std::invalid_argument("tolerances must be positive");

    const KinematicParams& P = config.params;
    const KinematicParams G = KinematicParams::galilean();
    const double rel_tol = config.tol.relative;
    const double abs_tol = config.tol.absolute;
    const double fd_tol = 1e-6;
    SuiteRunner suite(config);

    // ----- group laws -----

    suite.per_case("group.compose.associativity", rel_tol, [&](Sampler& s) {
        const GroupElement g1 = s.group_element(P);
        const GroupElement g2 = s.group_element(P);
        const GroupElement g3 = s.group_element(P);
        const GroupElement g12 = compose(g1, g2, P);
        const GroupElement g23 = compose(g2, g3, P);
        const GroupElement a = compose(g12, g3, P);
        const GroupElement b = compose(g1, g23, P);
        const double scale = std::max({norm_inf(g1), norm_inf(g2), norm_inf(g3), norm_inf(g12),
                                       norm_inf(g23), norm_inf(a), norm_inf(b)});
        return scaled(diff_inf(a, b), scale);
    });

    suite.per_case("group.compose.identity", abs_tol, [&](Sampler& s) {
        const GroupElement g = s.group_element(P);
        const GroupElement e = GroupElement::identity();
        return std::max(diff_inf(compose(e, g, P), g), diff_inf(compose(g, e, P), g));
    });

    suite.per_case("group.inverse.law", rel_tol, [&](Sampler& s) {
        const GroupElement g = s.group_element(P);
        const GroupElement gi = inverse(g, P);
        const GroupElement e = GroupElement::identity();
        const double residual =
            std::max(diff_inf(compose(g, gi, P), e), diff_inf(compose(gi, g, P), e));
        return scaled(residual, std::max(norm_inf(g), norm_inf(gi)));
    });

    suite.per_case("extended.compose.associativity", rel_tol, [&](Sampler& s) {
        const ExtendedGroupElement h1 = s.extended_element(P);
        const ExtendedGroupElement h2 = s.extended_element(P);
        const ExtendedGroupElement h3 = s.extended_element(P);
        const ExtendedGroupElement h12 = compose(h1, h2, P);
        const ExtendedGroupElement h23 = compose(h2, h3, P);
        const ExtendedGroupElement a = compose(h12, h3, P);
        const ExtendedGroupElement b = compose(h1, h23, P);
        const double scale = std::max({norm_inf(h1), norm_inf(h2), norm_inf(h3), norm_inf(h12),
                                       norm_inf(h23), norm_inf(a), norm_inf(b)});
        return scaled(diff_inf(a, b), scale);
    });

    suite.per_case("extended.projection.homomorphism", abs_tol, [&](Sampler& s) {
        const ExtendedGroupElement h1 = s.extended_element(P);
        const ExtendedGroupElement h2 = s.extended_element(P);
        const GroupElement via_extension = compose(h1, h2, P).projection();
        const GroupElement via_base = compose(h1.projection(), h2.projection(), P);
        return diff_inf(via_extension, via_base);
    });

    // ----- algebra -----

    suite.per_case("algebra.bracket.antisymmetry", abs_tol, [&](Sampler& s) {
        const AlgebraElement a = s.algebra_element();
        const AlgebraElement b = s.algebra_element();
        const Vec4 sum = bracket(a, b, P).coeffs + bracket(b, a, P).coeffs;
        return sum.cwiseAbs().maxCoeff();
    });

    suite.per_case("algebra.bracket.bilinearity", rel_tol, [&](Sampler& s) {
        const double alpha = s.coordinate();
        const double beta = s.coordinate();
        const AlgebraElement a = s.algebra_element();
        const AlgebraElement b = s.algebra_element();
        const AlgebraElement c = s.algebra_element();
        AlgebraElement combo;
        combo.coeffs = alpha * a.coeffs + beta * b.coeffs;
        const Vec4 left = bracket(combo, c, P).coeffs;
        const Vec4 right = alpha * bracket(a, c, P).coeffs + beta * bracket(b, c, P).coeffs;
        const double scale =
            std::max({left.cwiseAbs().maxCoeff(), right.cwiseAbs().maxCoeff(),
                      a.coeffs.cwiseAbs().maxCoeff(), b.coeffs.cwiseAbs().maxCoeff(),
                      c.coeffs.cwiseAbs().maxCoeff(), std::abs(alpha), std::abs(beta)});
        return scaled((left - right).cwiseAbs().maxCoeff(), scale);
    });

    suite.once("algebra.jacobi.structure_constants", abs_tol, 1,
               [&] { return jacobi_defect(StructureConstants(P)); });

    // ----- coadjoint action -----

    suite.per_case("coadjoint.action.identity", abs_tol, [&](Sampler& s) {
        const DualVector mu = s.dual_vector();
        return diff_inf(coadjoint_action(GroupElement::identity(), mu, P), mu);
    });

    suite.per_case("coadjoint.action.left_composition", rel_tol, [&](Sampler& s) {
        const GroupElement g1 = s.group_element(P);
        const GroupElement g2 = s.group_element(P);
        const DualVector mu = s.dual_vector();
        const GroupElement g12 = compose(g1, g2, P);
        const DualVector via_product = coadjoint_action(g12, mu, P);
        const DualVector stepwise = coadjoint_action(g1, coadjoint_action(g2, mu, P), P);
        const double scale =
            std::max({norm_inf(g1), norm_inf(g2), norm_inf(g12), norm_inf(mu),
                      norm_inf(coadjoint_action(g2, mu, P)), norm_inf(via_product),
                      norm_inf(stepwise)});
        return scaled(diff_inf(via_product, stepwise), scale);
    });

    suite.per_case("coadjoint.invariant.f", abs_tol, [&](Sampler& s) {
        const GroupElement g = s.group_element(P);
        const DualVector mu = s.dual_vector();
        return std::abs(coadjoint_action(g, mu, P).f - mu.f);
    });

    suite.per_case("coadjoint.invariant.casimir", rel_tol, [&](Sampler& s) {
        const GroupElement g = s.group_element(P);
        const DualVector mu = s.dual_vector();
        const DualVector moved = coadjoint_action(g, mu, P);
        const OrbitInvariants before = casimir(mu, P);
        const OrbitInvariants after = casimir(moved, P);
        const double scale = std::max({norm_inf(g), norm_inf(mu), norm_inf(moved),
                                       std::abs(before.casimir), std::abs(after.casimir)});
        return scaled(std::abs(after.casimir - before.casimir), scale);
    });

    // ----- Kirillov form and Lie-Poisson structure -----

    suite.per_case("coadjoint.kirillov.antisymmetry", abs_tol, [&](Sampler& s) {
        const KirillovMatrix m = kirillov_matrix(s.dual_vector(), P);
        return (m + KirillovMatrix(m.transpose())).cwiseAbs().maxCoeff();
    });

    suite.per_case("coadjoint.kirillov.kernel", abs_tol, [&](Sampler& s) {
        const DualVector mu = s.dual_vector();
        const Vec3 image = kirillov_matrix(mu, P) * kirillov_kernel(mu, P);
        return image.cwiseAbs().maxCoeff();
    });

    suite.per_case(
        "coadjoint.casimir.poisson_commutes", fd_tol,
        [&](Sampler& s) {
            const DualVector mu = s.dual_vector();
            const AlgebraElement grad = casimir_gradient_fd(mu, P);
            double worst = 0.0;
            for (Basis b : {Basis::K, Basis::P, Basis::E, Basis::F}) {
                worst = std::max(
                    worst, std::abs(lie_poisson_bracket(grad, AlgebraElement::basis(b), mu, P)));
            }
            const Vec3 grad_kep(grad.coeff(Basis::K), grad.coeff(Basis::E), grad.coeff(Basis::P));
            worst = std::max(worst,
                             (kirillov_matrix(mu, P) * grad_kep).cwiseAbs().maxCoeff());
            return worst;
        },
        "finite-difference-gradient");

    suite.per_case("coadjoint.lie_poisson.antisymmetry", abs_tol, [&](Sampler& s) {
        const AlgebraElement a = s.algebra_element();
        const AlgebraElement b = s.algebra_element();
        const DualVector mu = s.dual_vector();
        return std::abs(lie_poisson_bracket(a, b, mu, P) + lie_poisson_bracket(b, a, mu, P));
    });

    suite.per_case("coadjoint.lie_poisson.linearity", rel_tol, [&](Sampler& s) {
        const AlgebraElement a = s.algebra_element();
        const AlgebraElement b = s.algebra_element();
        const DualVector mu1 = s.dual_vector();
        const DualVector mu2 = s.dual_vector();
        const double lambda = s.coordinate();
        const DualVector combo{mu1.k + lambda * mu2.k, mu1.e + lambda * mu2.e,
                               mu1.p + lambda * mu2.p, mu1.f + lambda * mu2.f};
        const double left = lie_poisson_bracket(a, b, combo, P);
        const double right =
            lie_poisson_bracket(a, b, mu1, P) + lambda * lie_poisson_bracket(a, b, mu2, P);
        const double scale = std::max({std::abs(left), std::abs(right), norm_inf(mu1),
                                       norm_inf(mu2), std::abs(lambda),
                                       a.coeffs.cwiseAbs().maxCoeff(),
                                       b.coeffs.cwiseAbs().maxCoeff()});
        return scaled(std::abs(left - right), scale);
    });

    suite.per_case("coadjoint.orbit_point.roundtrip", rel_tol, [&](Sampler& s) {
        const DualVector mu = s.dual_vector();
        const OrbitInvariants inv = casimir(mu, P);
        const OrbitCoordinates coords = darboux_from_dual(mu);
        const DualVector back = orbit_point(inv, coords.p, coords.q, P);
        const double scale =
            std::max({norm_inf(mu), std::abs(inv.casimir), std::abs(coords.t), std::abs(coords.q)});
        return scaled(diff_inf(back, mu), scale);
    });

    // ----- symplectic realizations -----

    suite.per_case("realization.phase.left_action", rel_tol, [&](Sampler& s) {
        const GroupElement g1 = s.group_element(P);
        const GroupElement g2 = s.group_element(P);
        const double f = s.force();
        const PhasePoint pt = s.phase_point();
        const GroupElement g12 = compose(g1, g2, P);
        const PhasePoint inner = phase_action(g2, pt, f, P);
        const PhasePoint a = phase_action(g12, pt, f, P);
        const PhasePoint b = phase_action(g1, inner, f, P);
        const double scale = std::max({norm_inf(g1), norm_inf(g2), norm_inf(g12), norm_inf(pt),
                                       norm_inf(inner), norm_inf(a), norm_inf(b), std::abs(f)});
        return scaled(diff_inf(a, b), scale);
    });

    suite.per_case("realization.spacetime.left_action", rel_tol, [&](Sampler& s) {
        const GroupElement g1 = s.group_element(P);
        const GroupElement g2 = s.group_element(P);
        const SpacetimePoint pt = s.spacetime_point();
        const GroupElement g12 = compose(g1, g2, P);
        const SpacetimePoint inner = spacetime_action(g2, pt, P);
        const SpacetimePoint a = spacetime_action(g12, pt, P);
        const SpacetimePoint b = spacetime_action(g1, inner, P);
        const double scale = std::max({norm_inf(g1), norm_inf(g2), norm_inf(g12), norm_inf(pt),
                                       norm_inf(inner), norm_inf(a), norm_inf(b)});
        return scaled(diff_inf(a, b), scale);
    });

    suite.per_case("realization.phase.symplectic_determinant", abs_tol, [&](Sampler& s) {
        const GroupElement g = s.group_element(P);
        const double f = s.force();
        return std::abs(action_jacobian(g, f, P, Chart::Phase).determinant() - 1.0);
    });

    suite.per_case("realization.spacetime.area_determinant", abs_tol, [&](Sampler& s) {
        const GroupElement g = s.group_element(P);
        return std::abs(action_jacobian(g, 1.0, P, Chart::Spacetime).determinant() - 1.0);
    });

    suite.per_case(
        "realization.phase.jacobian_fd", fd_tol,
        [&](Sampler& s) {
            const GroupElement g = s.group_element(P);
            const double f = s.force();
            const PhasePoint pt = s.phase_point();
            const Mat2 closed = action_jacobian(g, f, P, Chart::Phase);
            const Mat2 fd = phase_jacobian_fd(g, pt, f, P);
            double worst = 0.0;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) worst = std::max(worst, scaled_dev(fd(i, j), closed(i, j)));
            return worst;
        },
        "finite-difference-jacobian");

    suite.per_case("realization.chart.equivariance", rel_tol, [&](Sampler& s) {
        const GroupElement g = s.group_element(P);
        const DualVector mu = s.dual_vector();
        const OrbitCoordinates before = darboux_from_dual(mu);
        const DualVector moved = coadjoint_action(g, mu, P);
        const OrbitCoordinates after = darboux_from_dual(moved);
        const SpacetimePoint st = spacetime_action(g, before.spacetime(), P);
        const PhasePoint ph = phase_action(g, before.phase(), mu.f, P);
        const double residual =
            std::max({std::abs(after.t - st.t), std::abs(after.q - st.q),
                      std::abs(after.p - ph.p), std::abs(after.q - ph.q)});
        const double scale = std::max({norm_inf(g), norm_inf(mu), norm_inf(moved),
                                       std::abs(before.t), std::abs(before.q), std::abs(before.p),
                                       std::abs(after.t), std::abs(after.q), std::abs(after.p),
                                       norm_inf(st), norm_inf(ph)});
        return scaled(residual, scale);
    });

    suite.per_case("realization.chart.consistency", rel_tol, [&](Sampler& s) {
        const GroupElement g = s.group_element(P);
        const double f = s.force();
        const PhasePoint pt = s.phase_point();
        const SpacetimePoint st{pt.p / f, pt.q};
        const PhasePoint moved_ph = phase_action(g, pt, f, P);
        const SpacetimePoint moved_st = spacetime_action(g, st, P);
        const double residual = std::max(std::abs(moved_st.t - moved_ph.p / f),
                                         std::abs(moved_st.q - moved_ph.q));
        const double scale = std::max({norm_inf(g), norm_inf(pt), norm_inf(st),
                                       norm_inf(moved_ph), norm_inf(moved_st),
                                       std::abs(moved_ph.p / f), std::abs(f)});
        return scaled(residual, scale);
    });

    if (P.is_galilean()) {
        suite.skip("realization.interval.invariance", "undefined-in-the-galilean-regime");
    } else {
        suite.per_case("realization.interval.invariance", rel_tol, [&](Sampler& s) {
            const GroupElement g = s.group_element(P);
            const SpacetimePoint a = s.spacetime_point();
            const SpacetimePoint b = s.spacetime_point();
            const double before = interval(a, b, P);
            const double after =
                interval(spacetime_action(g, a, P), spacetime_action(g, b, P), P);
            const double scale =
                std::max({std::abs(before), std::abs(after), norm_inf(a), norm_inf(b),
                          norm_inf(g)});
            return scaled(std::abs(after - before), scale);
        });
    }

    suite.per_case("realization.darboux.roundtrip", rel_tol, [&](Sampler& s) {
        const DualVector mu = s.dual_vector();
        const OrbitInvariants inv = casimir(mu, P);
        const PhasePoint pt = darboux_from_dual(mu).phase();
        const DualVector back = dual_from_darboux(inv, pt, P);
        const double scale = std::max({norm_inf(mu), std::abs(inv.casimir), norm_inf(pt)});
        return scaled(diff_inf(back, mu), scale);
    });

    // ----- Galilei contraction -----

    suite.per_case("contraction.compose.agrees_at_infinite_c", abs_tol, [&](Sampler& s) {
        const GroupElement g1 = s.group_element(G);
        const GroupElement g2 = s.group_element(G);
        const double compose_dev = diff_inf(compose(g1, g2, G), galilei_compose(g1, g2));
        const double inverse_dev = diff_inf(inverse(g1, G), galilei_inverse(g1));
        return std::max(compose_dev, inverse_dev);
    });

    suite.per_case("contraction.spacetime.agrees_at_infinite_c", abs_tol, [&](Sampler& s) {
        const GroupElement g = s.group_element(G);
        const SpacetimePoint pt = s.spacetime_point();
        return diff_inf(spacetime_action(g, pt, G), galilei_spacetime_action(g, pt));
    });

    suite.per_case("contraction.phase.agrees_at_infinite_c", abs_tol, [&](Sampler& s) {
        const GroupElement g = s.group_element(G);
        const PhasePoint pt = s.phase_point();
        const double f = s.force();
        return diff_inf(phase_action(g, pt, f, G), galilei_phase_action(g, pt, f));
    });

    suite.per_case("contraction.galilei.group_laws", abs_tol, [&](Sampler& s) {
        const GroupElement g1 = s.group_element(G);
        const GroupElement g2 = s.group_element(G);
        const GroupElement g3 = s.group_element(G);
        const GroupElement e = GroupElement::identity();
        const GroupElement gi = galilei_inverse(g1);
        double worst = diff_inf(galilei_compose(galilei_compose(g1, g2), g3),
                                galilei_compose(g1, galilei_compose(g2, g3)));
        worst = std::max(worst, diff_inf(galilei_compose(g1, gi), e));
        worst = std::max(worst, diff_inf(galilei_compose(gi, g1), e));
        worst = std::max(worst, diff_inf(galilei_compose(e, g1), g1));
        worst = std::max(worst, diff_inf(galilei_compose(g1, e), g1));
        return worst;
    });

    suite.per_case("contraction.galilei.left_action", rel_tol, [&](Sampler& s) {
        const GroupElement g1 = s.group_element(G);
        const GroupElement g2 = s.group_element(G);
        const SpacetimePoint st = s.spacetime_point();
        const PhasePoint ph = s.phase_point();
        const double f = s.force();
        const GroupElement g12 = galilei_compose(g1, g2);
        const SpacetimePoint st_inner = galilei_spacetime_action(g2, st);
        const SpacetimePoint st_a = galilei_spacetime_action(g12, st);
        const SpacetimePoint st_b = galilei_spacetime_action(g1, st_inner);
        const PhasePoint ph_inner = galilei_phase_action(g2, ph, f);
        const PhasePoint ph_a = galilei_phase_action(g12, ph, f);
        const PhasePoint ph_b = galilei_phase_action(g1, ph_inner, f);
        const double residual = std::max(diff_inf(st_a, st_b), diff_inf(ph_a, ph_b));
        const double scale =
            std::max({norm_inf(g1), norm_inf(g2), norm_inf(g12), norm_inf(st), norm_inf(ph),
                      norm_inf(st_inner), norm_inf(ph_inner), norm_inf(st_a), norm_inf(st_b),
                      norm_inf(ph_a), norm_inf(ph_b), std::abs(f)});
        return scaled(residual, scale);
    });

    suite.per_case("contraction.galilei.chart_consistency", rel_tol, [&](Sampler& s) {
        const GroupElement g = s.group_element(G);
        const double f = s.force();
        const PhasePoint pt = s.phase_point();
        const SpacetimePoint st{pt.p / f, pt.q};
        const PhasePoint moved_ph = galilei_phase_action(g, pt, f);
        const SpacetimePoint moved_st = galilei_spacetime_action(g, st);
        const double residual = std::max(std::abs(moved_st.t - moved_ph.p / f),
                                         std::abs(moved_st.q - moved_ph.q));
        const double scale = std::max({norm_inf(g), norm_inf(pt), norm_inf(st),
                                       norm_inf(moved_ph), norm_inf(moved_st),
                                       std::abs(moved_ph.p / f), std::abs(f)});
        return scaled(residual, scale);
    });

    suite.per_case(
        "contraction.extended.associativity", rel_tol,
        [&](Sampler& s) {
            const ExtendedGroupElement h1 = s.extended_element(G);
            const ExtendedGroupElement h2 = s.extended_element(G);
            const ExtendedGroupElement h3 = s.extended_element(G);
            const ExtendedGroupElement h12 = compose(h1, h2, G);
            const ExtendedGroupElement h23 = compose(h2, h3, G);
            const ExtendedGroupElement a = compose(h12, h3, G);
            const ExtendedGroupElement b = compose(h1, h23, G);
            const double scale = std::max({norm_inf(h1), norm_inf(h2), norm_inf(h3), norm_inf(h12),
                                           norm_inf(h23), norm_inf(a), norm_inf(b)});
            return scaled(diff_inf(a, b), scale);
        },
        "cocycle-in-the-galilean-regime");

    suite.once(
        "contraction.rate.slope", 0.1, kRateSampleSize,
        [&] {
            const ContractionSample sample = make_contraction_sample(
                property_seed(config.seed, "contraction.rate.slope"), kRateSampleSize);
            double worst = 0.0;
            for (ContractionOp op :
                 {ContractionOp::Compose, ContractionOp::Spacetime, ContractionOp::Phase}) {
                const ContractionReport report = contraction_rate(op, sample, rate_grid());
                if (!report.fitted_slope) return std::numeric_limits<double>::quiet_NaN();
                worst = std::max(worst, std::abs(*report.fitted_slope + 2.0));
            }
            return worst;
        },
        "distance-of-log-log-slope-from-minus-2");

    suite.once(
        "contraction.rate.monotone", 1.0, kRateSampleSize,
        [&] {
            const ContractionSample sample = make_contraction_sample(
                property_seed(config.seed, "contraction.rate.monotone"), kRateSampleSize);
            double worst = 0.0;
            for (ContractionOp op :
                 {ContractionOp::Compose, ContractionOp::Spacetime, ContractionOp::Phase}) {
                const ContractionReport report = contraction_rate(op, sample, rate_grid());
                for (std::size_t i = 1; i < report.deviations.size(); ++i) {
                    if (report.deviations[i - 1] == 0.0)
                        return std::numeric_limits<double>::quiet_NaN();
                    worst = std::max(worst, report.deviations[i] / report.deviations[i - 1]);
                }
            }
            return worst;
        },
        "worst-ratio-of-consecutive-deviations");

    suite.once(
        "contraction.rate.degenerate_flag", abs_tol, kRateSampleSize,
        [&] {
            const ContractionSample sample = make_contraction_sample(
                property_seed(config.seed, "contraction.rate.degenerate_flag"), kRateSampleSize,
                /*zero_boosts=*/true);
            double worst = 0.0;
            for (ContractionOp op :
                 {ContractionOp::Compose, ContractionOp::Spacetime, ContractionOp::Phase}) {
                const ContractionReport report = contraction_rate(op, sample, rate_grid());
                if (!report.degenerate_sample || report.fitted_slope)
                    return std::numeric_limits<double>::quiet_NaN();
                for (double dev : report.deviations) worst = std::max(worst, dev);
            }
            return worst;
        },
        "all-zero-boost-sample");

    // ----- serialization -----

    suite.per_case("io.json.roundtrip", abs_tol, [&](Sampler& s) {
        double worst = 0.0;
        const GroupElement g = s.group_element(P);
        worst = std::max(worst, diff_inf(Json::parse(Json(g).dump()).get<GroupElement>(), g));
        const ExtendedGroupElement h = s.extended_element(P);
        worst = std::max(worst,
                         diff_inf(Json::parse(Json(h).dump()).get<ExtendedGroupElement>(), h));
        const DualVector mu = s.dual_vector();
        worst = std::max(worst, diff_inf(Json::parse(Json(mu).dump()).get<DualVector>(), mu));
        const PhasePoint ph = s.phase_point();
        worst = std::max(worst, diff_inf(Json::parse(Json(ph).dump()).get<PhasePoint>(), ph));
        const SpacetimePoint st = s.spacetime_point();
        worst = std::max(worst, diff_inf(Json::parse(Json(st).dump()).get<SpacetimePoint>(), st));
        return worst;
    });

    return suite.take();
}

namespace {

const char* status_name(PropertyResult::Status status) {
    switch (status) {
        case PropertyResult::Status::Pass: return "PASS";
        case PropertyResult::Status::Fail: return "FAIL";
        case PropertyResult::Status::Skip: return "SKIP";
    }
    return "UNKNOWN";
}

}  // namespace

std::string format_report(const std::vector<PropertyResult>& results, const RunConfig& config) {
    std::string out;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    for (const PropertyResult& r : results) {
        switch (r.status) {
            case PropertyResult::Status::Pass: ++passed; break;
            case PropertyResult::Status::Fail: ++failed; break;
            case PropertyResult::Status::Skip: ++skipped; break;
        }
        out += r.name;
        out += " cases=";
        out += std::to_string(r.cases);
        out += " max_dev=";
        out += format_double(r.max_dev);
        out += " tol=";
        out += format_double(r.tol);
        out += " status=";
        out += status_name(r.status);
        if (!r.note.empty()) {
            out += " note=";
            out += r.note;
        }
        out += '\n';
    }
    out += "summary properties=" + std::to_string(results.size());
    out += " passed=" + std::to_string(passed);
    out += " failed=" + std::to_string(failed);
    out += " skipped=" + std::to_string(skipped);
    out += " seed=" + std::to_string(config.seed);
    out += " cases=" + std::to_string(config.cases);
    out += " c=";
    out += config.params.is_galilean() ? "inf" : format_double(config.params.c());
    out += " rel_tol=" + format_double(config.tol.relative);
    out += " abs_tol=" + format_double(config.tol.absolute);
    out += '\n';
    return out;
}

bool all_passed(const std::vector<PropertyResult>& results) {
    return std::none_of(results.begin(), results.end(), [](const PropertyResult& r) {
        return r.status == PropertyResult::Status::Fail;
    });
}

}  // namespace poincare1d
