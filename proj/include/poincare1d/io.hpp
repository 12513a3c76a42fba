#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "poincare1d/coadjoint.hpp"
#include "poincare1d/contraction.hpp"
#include "poincare1d/group.hpp"
#include "poincare1d/realization.hpp"

namespace poincare1d {

/// Key order is part of the output contract, so all serialization goes
/// through the order-preserving JSON type.
using Json = nlohmann::ordered_json;

// Serializers for the five wire schemas. Field names are exact:
// {"v","tau","x"}, {"v","tau","x","zeta"}, {"k","e","p","f"},
// {"p","q"}, {"t","q"}.
void to_json(Json& j, const GroupElement& g);
void to_json(Json& j, const ExtendedGroupElement& h);
void to_json(Json& j, const DualVector& mu);
void to_json(Json& j, const PhasePoint& pt);
void to_json(Json& j, const SpacetimePoint& pt);

// Strict parsers: the value must be an object carrying exactly the schema's
// keys with finite numeric values; anything else is std::invalid_argument.
void from_json(const Json& j, GroupElement& g);
void from_json(const Json& j, ExtendedGroupElement& h);
void from_json(const Json& j, DualVector& mu);
void from_json(const Json& j, PhasePoint& pt);
void from_json(const Json& j, SpacetimePoint& pt);

/// Shortest representation that parses back to the same double; locale-free.
std::string format_double(double value);

/// Value at 17 significant digits (full round-trip precision), '.' decimal
/// separator regardless of locale.
std::string csv_number(double value);

std::string orbit_csv_header();

/// One orbit CSV row: the dual coordinates followed by the chart pair
/// t = p/f, q = -e/f.
std::string orbit_csv_row(const DualVector& mu);

/// Grid spec: either a bare number (one node) or "lo:hi:count" for an
/// inclusive linear grid with count >= 1 nodes (count = 1 yields lo).
/// Throws InvalidGrid on malformed input or hi < lo.
std::vector<double> parse_grid_spec(const std::string& spec);

/// Comma-separated list of finite positive speeds; InvalidGrid otherwise.
std::vector<double> parse_c_grid(const std::string& text);

/// "inf" selects the Galilean regime; anything else must parse as a
/// positive finite speed.
KinematicParams parse_c_value(const std::string& text);

const char* contraction_op_name(ContractionOp op);
ContractionOp parse_contraction_op(const std::string& text);

/// Report as JSON; fitted_slope is null for a degenerate sample.
Json contraction_report_json(ContractionOp op, std::size_t sample_size,
                             const ContractionReport& report);

}  // namespace poincare1d
