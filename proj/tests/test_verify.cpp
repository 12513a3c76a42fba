#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "poincare1d/verify.hpp"

using namespace poincare1d;

namespace {
RunConfig small_config() {
    RunConfig config;
    config.cases = 100;
    return config;
}
}  // namespace

TEST_CASE("scaled deviation floors at absolute scale") {
    CHECK(scaled_dev(0.0, 0.0) == 0.0);
    CHECK(scaled_dev(1.0, 1.0) == 0.0);
    CHECK(scaled_dev(0.5, 0.25) == 0.25);           // below scale 1: absolute
    CHECK(scaled_dev(200.0, 100.0) == 0.5);         // above scale 1: relative
    CHECK(scaled_dev(2e10, 2e10 + 4096.0) == doctest::Approx(2.048e-7).epsilon(1e-12));
}

TEST_CASE("the default suite passes") {
    const RunConfig config = small_config();
    const std::vector<PropertyResult> results = run_verification(config);

    CHECK(all_passed(results));
    CHECK(results.size() == 38);
    CHECK(std::is_sorted(results.begin(), results.end(),
                         [](const PropertyResult& a, const PropertyResult& b) {
                             return a.name < b.name;
                         }));
    for (const PropertyResult& r : results) CHECK(r.status != PropertyResult::Status::Fail);
}

TEST_CASE("the suite passes in the other regimes") {
    RunConfig config = small_config();

    config.params = KinematicParams::speed_of_light(3e8);
    CHECK(all_passed(run_verification(config)));

    config.params = KinematicParams::galilean();
    const std::vector<PropertyResult> results = run_verification(config);
    CHECK(all_passed(results));

    const auto skipped =
        std::find_if(results.begin(), results.end(), [](const PropertyResult& r) {
            return r.status == PropertyResult::Status::Skip;
        });
    REQUIRE(skipped != results.end());
    CHECK(skipped->name == "realization.interval.invariance");
    CHECK_FALSE(skipped->note.empty());
}

TEST_CASE("unreachable tolerances are reported as failures, not errors") {
    RunConfig config = small_config();
    config.tol.relative = 1e-30;
    config.tol.absolute = 1e-300;
    const std::vector<PropertyResult> results = run_verification(config);
    CHECK_FALSE(all_passed(results));
}

TEST_CASE("invalid configurations are rejected") {
    RunConfig config;
    config.cases = 0;
    CHECK_THROWS_AS(run_verification(config), std::invalid_argument);

    config = RunConfig{};
    config.tol.relative = 0.0;
    CHECK_THROWS_AS(run_verification(config), std::invalid_argument);

    config = RunConfig{};
    config.tol.absolute = -1e-12;
    CHECK_THROWS_AS(run_verification(config), std::invalid_argument);
}

TEST_CASE("reports are deterministic") {
    const RunConfig config = small_config();
    const std::string a = format_report(run_verification(config), config);
    const std::string b = format_report(run_verification(config), config);
    CHECK(a == b);
    CHECK(a.find("summary properties=38") != std::string::npos);
    CHECK(a.find("seed=42") != std::string::npos);
    CHECK(a.find("status=PASS") != std::string::npos);

    RunConfig reseeded = config;
    reseeded.seed = 43;
    CHECK(format_report(run_verification(reseeded), reseeded) != a);
}
