#include <cmath>
#include <cstdint>
#include <exception>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "poincare1d/coadjoint.hpp"
#include "poincare1d/contraction.hpp"
#include "poincare1d/group.hpp"
#include "poincare1d/io.hpp"
#include "poincare1d/realization.hpp"
#include "poincare1d/verify.hpp"

namespace {

using namespace poincare1d;

int cmd_verify(const RunConfig& config) {
    const std::vector<PropertyResult> results = run_verification(config);
    std::cout << format_report(results, config);
    return all_passed(results) ? 0 : 1;
}

int cmd_transform(const std::string& kind, const std::string& element_text,
                  const std::string& point_text, bool have_f, double f,
                  const KinematicParams& params) {
    const Json element = Json::parse(element_text);
    const Json point = Json::parse(point_text);
    Json out;
    if (kind == "group") {
        if (element.contains("zeta") || point.contains("zeta"))
            out = compose(element.get<ExtendedGroupElement>(),
                          point.get<ExtendedGroupElement>(), params);
        else
            out = compose(element.get<GroupElement>(), point.get<GroupElement>(), params);
    } else if (kind == "coadjoint") {
        out = coadjoint_action(element.get<GroupElement>(), point.get<DualVector>(), params);
    } else if (kind == "phase") {
        if (!have_f)
            throw std::invalid_argument("transform phase needs the orbit label: pass --f");
        out = phase_action(element.get<GroupElement>(), point.get<PhasePoint>(), f, params);
    } else {
        out = spacetime_action(element.get<GroupElement>(), point.get<SpacetimePoint>(), params);
    }
    std::cout << out.dump() << '\n';
    return 0;
}

int cmd_orbit(double f, double casimir_value, const std::string& p_spec,
              const std::string& q_spec, const KinematicParams& params, double abs_tol) {
    const std::vector<double> p_nodes = parse_grid_spec(p_spec);
    const std::vector<double> q_nodes = parse_grid_spec(q_spec);
    const OrbitInvariants invariants{f, casimir_value};
    std::string out = orbit_csv_header();
    out += '\n';
    bool rows_valid = true;
    for (double p : p_nodes) {
        for (double q : q_nodes) {
            const DualVector mu = orbit_point(invariants, p, q, params);
            const OrbitInvariants check = casimir(mu, params);
            if (!(std::abs(check.casimir - casimir_value) <= abs_tol) || check.f != f) {
                std::cerr << "orbit: row at p=" << format_double(p) << " q=" << format_double(q)
                          << " fails the Casimir check: got " << format_double(check.casimir)
                          << ", want " << format_double(casimir_value) << '\n';
                rows_valid = false;
            }
            out += orbit_csv_row(mu);
            out += '\n';
        }
    }
    std::cout << out;
    return rows_valid ? 0 : 1;
}

int cmd_contract(ContractionOp op, const std::string& grid_text, std::uint64_t seed,
                 std::size_t cases, bool zero_boosts) {
    const std::vector<double> c_grid = parse_c_grid(grid_text);
    const ContractionSample sample = make_contraction_sample(seed, cases, zero_boosts);
    const ContractionReport report = contraction_rate(op, sample, c_grid);
    std::cout << contraction_report_json(op, cases, report).dump() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1+1D Poincare group: central extension, coadjoint orbits, symplectic\n"
                 "realizations, and the Galilei contraction, with property verification."};
    app.require_subcommand(1);

    std::string c_text = "1";
    std::uint64_t seed = 42;
    std::size_t cases = 1000;
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    app.add_option("--c", c_text, "speed of light: a positive number, or 'inf' for the Galilean regime")
        ->capture_default_str();
    app.add_option("--seed", seed, "seed for all random sampling")->capture_default_str();
    app.add_option("--cases", cases, "random cases per property / sample size")
        ->capture_default_str();
    app.add_option("--rel-tol", rel_tol, "relative tolerance for composed laws")
        ->capture_default_str();
    app.add_option("--abs-tol", abs_tol, "absolute tolerance for identity-type residuals")
        ->capture_default_str();

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the full property suite");
    verify_cmd->fallthrough();

    CLI::App* transform_cmd =
        app.add_subcommand("transform", "apply a group element to a point and print JSON");
    transform_cmd->fallthrough();
    std::string kind;
    std::string element_text;
    std::string point_text;
    double f_value = 0.0;
    transform_cmd->add_option("kind", kind, "which action to apply")
        ->required()
        ->check(CLI::IsMember({"group", "coadjoint", "phase", "spacetime"}));
    transform_cmd->add_option("--element", element_text, "acting group element as JSON")
        ->required();
    transform_cmd->add_option("--point", point_text, "point to transform as JSON")->required();
    CLI::Option* f_opt =
        transform_cmd->add_option("--f", f_value, "orbit label f (required for kind=phase)");

    CLI::App* orbit_cmd =
        app.add_subcommand("orbit", "materialize orbit points over a chart grid as CSV");
    orbit_cmd->fallthrough();
    double orbit_f = 0.0;
    double orbit_casimir = 0.0;
    std::string p_spec;
    std::string q_spec;
    orbit_cmd->add_option("--f", orbit_f, "orbit label f (nonzero)")->required();
    orbit_cmd->add_option("--casimir", orbit_casimir, "Casimir value of the orbit")->required();
    orbit_cmd->add_option("--p-range", p_spec, "momentum grid: a number or lo:hi:count")
        ->required();
    orbit_cmd->add_option("--q-range", q_spec, "position grid: a number or lo:hi:count")
        ->required();

    CLI::App* contract_cmd =
        app.add_subcommand("contract", "measure how fast an operation reaches its Galilean limit");
    contract_cmd->fallthrough();
    std::string op_text;
    std::string c_grid_text = "1e2,1e3,1e4,1e5,1e6";
    bool zero_boosts = false;
    contract_cmd->add_option("op", op_text, "operation to contract")
        ->required()
        ->check(CLI::IsMember({"compose", "spacetime", "phase"}));
    contract_cmd->add_option("--c-grid", c_grid_text, "comma-separated, strictly increasing speeds")
        ->capture_default_str();
    contract_cmd->add_flag("--zero-boosts", zero_boosts,
                           "force every sampled boost to zero (degenerate sample)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (cases == 0) throw std::invalid_argument("--cases must be at least 1");
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
            throw std::invalid_argument("tolerances must be positive");
        const KinematicParams params = parse_c_value(c_text);
        if (verify_cmd->parsed()) {
            RunConfig config;
            config.seed = seed;
            config.cases = cases;
            config.tol = Tolerances{rel_tol, abs_tol};
            config.params = params;
            return cmd_verify(config);
        }
        if (transform_cmd->parsed())
            return cmd_transform(kind, element_text, point_text, f_opt->count() > 0, f_value,
                                 params);
        if (orbit_cmd->parsed())
            return cmd_orbit(orbit_f, orbit_casimir, p_spec, q_spec, params, abs_tol);
        if (contract_cmd->parsed())
            return cmd_contract(parse_contraction_op(op_text), c_grid_text, seed, cases,
                                zero_boosts);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
