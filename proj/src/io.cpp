#include "poincare1d/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <initializer_list>
#include <stdexcept>

namespace poincare1d {

namespace {

constexpr long long kMaxGridNodes = 10'000'000;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_double_or_grid_error(const std::string& text, const char* what) {
    double value = 0.0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw InvalidGrid(std::string(what) + ": cannot parse number '" + text + "'");
    return value;
}

long long parse_count(const std::string& text, const std::string& spec) {
    long long value = 0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw InvalidGrid("grid spec count must be an integer: '" + spec + "'");
    return value;
}

void require_schema(const Json& j, std::initializer_list<const char*> keys, const char* schema) {
    if (!j.is_object())
        throw std::invalid_argument(std::string(schema) + ": expected a JSON object");
    for (const char* key : keys) {
        if (!j.contains(key))
            throw std::invalid_argument(std::string(schema) + ": missing field '" + key + "'");
    }
    if (j.size() != keys.size()) {
        for (const auto& item : j.items()) {
            const bool known = std::any_of(keys.begin(), keys.end(), [&](const char* key) {
                return item.key() == key;
            });
            if (!known)
                throw std::invalid_argument(std::string(schema) + ": unexpected field '" +
                                            item.key() + "'");
        }
    }
}

double number_at(const Json& j, const char* key, const char* schema) {
    const Json& value = j.at(key);
    if (!value.is_number())
        throw std::invalid_argument(std::string(schema) + ": field '" + key +
                                    "' must be a number");
    const double d = value.get<double>();
    if (!std::isfinite(d))
        throw std::invalid_argument(std::string(schema) + ": field '" + key +
                                    "' must be finite");
    return d;
}

}  // namespace

void to_json(Json& j, const GroupElement& g) {
    j = Json{{"v", g.v}, {"tau", g.tau}, {"x", g.x}};
}

void to_json(Json& j, const ExtendedGroupElement& h) {
    j = Json{{"v", h.v}, {"tau", h.tau}, {"x", h.x}, {"zeta", h.zeta}};
}

void to_json(Json& j, const DualVector& mu) {
    j = Json{{"k", mu.k}, {"e", mu.e}, {"p", mu.p}, {"f", mu.f}};
}

void to_json(Json& j, const PhasePoint& pt) {
    j = Json{{"p", pt.p}, {"q", pt.q}};
}

void to_json(Json& j, const SpacetimePoint& pt) {
    j = Json{{"t", pt.t}, {"q", pt.q}};
}

void from_json(const Json& j, GroupElement& g) {
    require_schema(j, {"v", "tau", "x"}, "group element");
    g.v = number_at(j, "v", "group element");
    g.tau = number_at(j, "tau", "group element");
    g.x = number_at(j, "x", "group element");
}

void from_json(const Json& j, ExtendedGroupElement& h) {
    require_schema(j, {"v", "tau", "x", "zeta"}, "extended element");
    h.v = number_at(j, "v", "extended element");
    h.tau = number_at(j, "tau", "extended element");
    h.x = number_at(j, "x", "extended element");
    h.zeta = number_at(j, "zeta", "extended element");
}

void from_json(const Json& j, DualVector& mu) {
    require_schema(j, {"k", "e", "p", "f"}, "dual vector");
    mu.k = number_at(j, "k", "dual vector");
    mu.e = number_at(j, "e", "dual vector");
    mu.p = number_at(j, "p", "dual vector");
    mu.f = number_at(j, "f", "dual vector");
}

void from_json(const Json& j, PhasePoint& pt) {
    require_schema(j, {"p", "q"}, "phase point");
    pt.p = number_at(j, "p", "phase point");
    pt.q = number_at(j, "q", "phase point");
}

void from_json(const Json& j, SpacetimePoint& pt) {
    require_schema(j, {"t", "q"}, "spacetime point");
    pt.t = number_at(j, "t", "spacetime point");
    pt.q = number_at(j, "q", "spacetime point");
}

std::string format_double(double value) {
    std::array<char, 64> buffer;
    const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), ptr);
}

std::string csv_number(double value) {
    if (value == 0.0) return "0";
    std::array<char, 64> buffer;
    const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                         std::chars_format::general, 17);
    return std::string(buffer.data(), ptr);
}

std::string orbit_csv_header() { return "k,e,p,f,t,q"; }

std::string orbit_csv_row(const DualVector& mu) {
    const OrbitCoordinates coords = darboux_from_dual(mu);
    std::string row = csv_number(mu.k);
    for (double value : {mu.e, mu.p, mu.f, coords.t, coords.q}) {
        row += ',';
        row += csv_number(value);
    }
    return row;
}

std::vector<double> parse_grid_spec(const std::string& spec) {
    const std::vector<std::string> parts = split(spec, ':');
    if (parts.size() == 1) {
        const double node = parse_double_or_grid_error(parts[0], "grid spec");
        if (!std::isfinite(node)) throw InvalidGrid("grid spec node must be finite: '" + spec + "'");
        return {node};
    }
    if (parts.size() != 3)
        throw InvalidGrid("grid spec must be '<number>' or 'lo:hi:count': '" + spec + "'");
    const double lo = parse_double_or_grid_error(parts[0], "grid spec");
    const double hi = parse_double_or_grid_error(parts[1], "grid spec");
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw InvalidGrid("grid spec bounds must be finite: '" + spec + "'");
    if (hi < lo)
        throw InvalidGrid("grid spec upper bound is below lower bound: '" + spec + "'");
    const long long count = parse_count(parts[2], spec);
    if (count < 1) throw InvalidGrid("grid spec needs at least one node: '" + spec + "'");
    if (count > kMaxGridNodes)
        throw InvalidGrid("grid spec requests too many nodes: '" + spec + "'");
    if (count == 1) return {lo};
    std::vector<double> nodes(static_cast<std::size_t>(count));
    for (long long i = 0; i < count; ++i)
        nodes[static_cast<std::size_t>(i)] =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    nodes.back() = hi;
    return nodes;
}

std::vector<double> parse_c_grid(const std::string& text) {
    const std::vector<std::string> parts = split(text, ',');
    std::vector<double> grid;
    grid.reserve(parts.size());
    for (const std::string& part : parts) {
        const double c = parse_double_or_grid_error(part, "c grid");
        if (!std::isfinite(c) || !(c > 0.0))
            throw InvalidGrid("c grid entries must be finite and positive: '" + part + "'");
        grid.push_back(c);
    }
    return grid;
}

KinematicParams parse_c_value(const std::string& text) {
    if (text == "inf") return KinematicParams::galilean();
    double value = 0.0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw std::invalid_argument("speed of light must be a positive number or 'inf', got '" +
                                    text + "'");
    return KinematicParams::speed_of_light(value);
}

const char* contraction_op_name(ContractionOp op) {
    switch (op) {
        case ContractionOp::Compose: return "compose";
        case ContractionOp::Spacetime: return "spacetime";
        case ContractionOp::Phase: return "phase";
    }
    return "unknown";
}

ContractionOp parse_contraction_op(const std::string& text) {
    if (text == "compose") return ContractionOp::Compose;
    if (text == "spacetime") return ContractionOp::Spacetime;
    if (text == "phase") return ContractionOp::Phase;
    throw std::invalid_argument("operation must be compose, spacetime, or phase, got '" + text +
                                "'");
}

Json contraction_report_json(ContractionOp op, std::size_t sample_size,
                             const ContractionReport& report) {
    Json j;
    j["op"] = contraction_op_name(op);
    j["cases"] = sample_size;
    j["c_grid"] = report.c_grid;
    j["deviations"] = report.deviations;
    if (report.fitted_slope)
        j["fitted_slope"] = *report.fitted_slope;
    else
        j["fitted_slope"] = nullptr;
    j["degenerate_sample"] = report.degenerate_sample;
    return j;
}

}  // namespace poincare1d
