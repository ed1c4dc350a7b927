#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "gencover/code.hpp"
#include "gencover/planner.hpp"
#include "gencover/radii.hpp"

namespace gencover {

/// Text code file:
///   q <prime>
///   n <length>
///   k <rows>
///   G
///   <k lines of n integers in [0, q)>
/// Throws ParseError on any malformed input; NonPrimeCharacteristic for q.
LinearCode parse_code(std::istream& in);
LinearCode read_code_file(const std::string& path);
void write_code(std::ostream& out, const LinearCode& code);

/// One syndrome per line, `len` integers in [0, q); `#` starts a comment.
std::vector<Vec> parse_syndromes(std::istream& in, std::size_t len, std::uint32_t q);
std::vector<Vec> read_syndrome_file(const std::string& path, std::size_t len, std::uint32_t q);

nlohmann::json to_json(const RadiiReport& report);
RadiiReport radii_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BatchPlan& plan);
/// The field is not stored in the JSON; it is supplied by the caller.
BatchPlan batch_plan_from_json(const nlohmann::json& j, const FieldPtr& field);

bool operator==(const RadiusEntry& a, const RadiusEntry& b);
bool operator==(const RadiiReport& a, const RadiiReport& b);
bool operator==(const BatchPlan& a, const BatchPlan& b);

}  // namespace gencover
