#include "poincare1d/contraction.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "poincare1d/sampling.hpp"

namespace poincare1d {

double ContractionSample::max_speed() const {
    double m = 0.0;
    for (const auto& g : elements) m = std::max(m, std::abs(g.v));
    for (const auto& g : partners) m = std::max(m, std::abs(g.v));
    return m;
}

ContractionSample make_contraction_sample(std::uint64_t seed, std::size_t n,
                                          bool zero_boosts) {
    Sampler sampler(seed);
    const KinematicParams galilean = KinematicParams::galilean();
    ContractionSample sample;
    sample.elements.reserve(n);
    sample.partners.reserve(n);
    sample.spacetime_points.reserve(n);
    sample.phase_points.reserve(n);
    sample.forces.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        GroupElement g = sampler.group_element(galilean);
        GroupElement g2 = sampler.group_element(galilean);
        if (zero_boosts) {
            g.v = 0.0;
            g2.v = 0.0;
        }
        sample.elements.push_back(g);
        sample.partners.push_back(g2);
        sample.spacetime_points.push_back(sampler.spacetime_point());
        sample.phase_points.push_back(sampler.phase_point());
        sample.forces.push_back(sampler.force());
    }
    return sample;
}

namespace {

double sup_deviation(ContractionOp op, const ContractionSample& sample,
                     const KinematicParams& params) {
    double worst = 0.0;
    auto track = [&worst](double a, double b) {
        worst = std::max(worst, std::abs(a - b));
    };
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const GroupElement& g = sample.elements[i];
        switch (op) {
            case ContractionOp::Compose: {
                const GroupElement finite = compose(g, sample.partners[i], params);
                const GroupElement limit = galilei_compose(g, sample.partners[i]);
                track(finite.v, limit.v);
                track(finite.tau, limit.tau);
                track(finite.x, limit.x);
                break;
            }
            case ContractionOp::Spacetime: {
                const SpacetimePoint finite =
                    spacetime_action(g, sample.spacetime_points[i], params);
                const SpacetimePoint limit =
                    galilei_spacetime_action(g, sample.spacetime_points[i]);
                track(finite.t, limit.t);
                track(finite.q, limit.q);
                break;
            }
            case ContractionOp::Phase: {
                const double f = sample.forces[i];
                const PhasePoint finite = phase_action(g, sample.phase_points[i], f, params);
                const PhasePoint limit = galilei_phase_action(g, sample.phase_points[i], f);
                track(finite.p, limit.p);
                track(finite.q, limit.q);
                break;
            }
        }
    }
    return worst;
}

}  // namespace

ContractionReport contraction_rate(ContractionOp op, const ContractionSample& sample,
                                   const std::vector<double>& c_grid) {
    if (c_grid.empty()) throw InvalidGrid("contraction_rate: empty c grid");
    for (std::size_t i = 1; i < c_grid.size(); ++i) {
        if (!(c_grid[i] > c_grid[i - 1]))
            throw InvalidGrid("contraction_rate: c grid must be strictly increasing");
    }
    const double max_speed = sample.max_speed();
    if (!(c_grid.front() > max_speed))
        throw InvalidGrid("contraction_rate: grid speeds must exceed every sampled velocity");

    ContractionReport report;
    report.c_grid = c_grid;
    report.deviations.reserve(c_grid.size());
    for (double c : c_grid) {
        const KinematicParams params = KinematicParams::speed_of_light(c);
        report.deviations.push_back(sup_deviation(op, sample, params));
    }

    const bool any_zero = std::any_of(report.deviations.begin(), report.deviations.end(),
                                      [](double d) { return d == 0.0; });
    report.degenerate_sample = any_zero;
    if (any_zero || c_grid.size() < 2) return report;

    // Least-squares slope of log(deviation) against log(c).
    const auto n = static_cast<Eigen::Index>(c_grid.size());
    Eigen::MatrixXd design(n, 2);
    Eigen::VectorXd response(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        design(i, 0) = 1.0;
        design(i, 1) = std::log(c_grid[static_cast<std::size_t>(i)]);
        response(i) = std::log(report.deviations[static_cast<std::size_t>(i)]);
    }
    const Eigen::Vector2d fit = design.colPivHouseholderQr().solve(response);
    report.fitted_slope = fit(1);
    return report;
}

}  // namespace poincare1d
