#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace heckelab {

inline constexpr const char* kVersion = "1.0.0";

// %.17g: enough digits to round-trip any double.
std::string format_double(double x);

// '#'-prefixed metadata block that precedes every CSV data section.
void write_csv_header(std::ostream& out, const std::string& command,
                      const std::vector<std::pair<std::string, std::string>>& fields);

// {"header": {tool, version, command, config}, "data": data}
nlohmann::json json_envelope(const std::string& command, const nlohmann::json& config,
                             nlohmann::json data);

void write_json(std::ostream& out, const nlohmann::json& doc);

}  // namespace heckelab
