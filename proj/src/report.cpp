#include "heckelab/report.hpp"

#include <cstdio>
#include <ostream>

namespace heckelab {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv_header(std::ostream& out, const std::string& command,
                      const std::vector<std::pair<std::string, std::string>>& fields) {
  out << "# heckelab " << kVersion << '\n';
  out << "# command=" << command << '\n';
  for (const auto& [key, value] : fields) out << "# " << key << '=' << value << '\n';
}

nlohmann::json json_envelope(const std::string& command, const nlohmann::json& config,
                             nlohmann::json data) {
  nlohmann::json doc;
  doc["header"] = {{"tool", "heckelab"}, {"version", kVersion}, {"command", command},
                   {"config", config}};
  doc["data"] = std::move(data);
  return doc;
}

void write_json(std::ostream& out, const nlohmann::json& doc) { out << doc.dump(2) << '\n'; }

}  // namespace heckelab
