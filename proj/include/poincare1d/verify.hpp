#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "poincare1d/group.hpp"
#include "poincare1d/types.hpp"

namespace poincare1d {

/// Configuration of one verification run.
struct RunConfig {
    std::uint64_t seed = 42;
    std::size_t cases = 1000;
    Tolerances tol;
    KinematicParams params = KinematicParams::speed_of_light(1.0);
};

/// Outcome of one property: worst observed deviation against its tolerance.
/// Skipped properties (e.g. the interval in the Galilean regime) carry a
/// note instead of a deviation.
struct PropertyResult {
    enum class Status { Pass, Fail, Skip };

    std::string name;
    std::size_t cases = 0;
    double max_dev = 0.0;
    double tol = 0.0;
    Status status = Status::Pass;
    std::string note;
};

/// |a - b| / max(1, |a|, |b|): behaves like an absolute deviation near the
/// origin and a relative one at scale.
inline double scaled_dev(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

/// Run the full property suite. Deterministic for a fixed config: every
/// property draws from its own stream seeded by hash(name) ^ mix(seed), so
/// the suite's results are independent of property ordering. Results come
/// back sorted by name. Throws std::invalid_argument on an invalid config
/// (cases = 0 or non-positive tolerances).
std::vector<PropertyResult> run_verification(const RunConfig& config);

/// One line per property (name, cases, worst deviation, tolerance, status)
/// followed by a summary line; byte-identical across runs with the same
/// config.
std::string format_report(const std::vector<PropertyResult>& results, const RunConfig& config);

bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace poincare1d
