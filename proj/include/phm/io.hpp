#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "phm/criteria.hpp"
#include "phm/extraction.hpp"
#include "phm/functionals.hpp"
#include "phm/series.hpp"
#include "phm/univalence.hpp"

namespace phm::io {

using nlohmann::json;

// Map-spec format:
//   {"n": int, "D": int,
//    "h": [{"alpha": [..], "re": float, "im": float}, ...],
//    "g": [ ... ]}
// Terms are written in graded-lex order; any order is accepted on read.
// Duplicate alphas, wrong dimensions, or degrees above D are errors.

/// Throws MapSpecError naming the line (syntax errors) or the field path
/// (schema errors), e.g. "h[2].alpha: expected array of 2 non-negative integers".
PluriharmonicMap parse_map_spec(std::string_view text);
PluriharmonicMap load_map_spec(const std::filesystem::path& path);

json map_spec_json(const PluriharmonicMap& f);
std::string dump_map_spec(const PluriharmonicMap& f);

/// Witness points are written as per-axis polar coordinates {"r", "theta"}.
json point_json(const ComplexPoint& z);

json to_json(const MembershipReport& rep);
json to_json(const CriterionReport& rep);
json to_json(const InjectivityVerdict& v);
json to_json(const StableScanReport& rep);
json to_json(const CoefficientTable& table);
json to_json(const OrthogonalityReport& rep);

} // namespace phm::io
