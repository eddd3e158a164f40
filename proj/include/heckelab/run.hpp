#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace heckelab {

enum class Command { sieve, sectors, variance, weyl, realquad, forbidden };
enum class OutputFormat { csv, json };

std::string to_string(Command c);

struct ExperimentConfig {
  Command command = Command::sectors;
  double x = 1e4;
  std::vector<double> x_list;  // variance: overrides x when non-empty
  double rho = 0.3;
  std::vector<double> tau_list = {0.4};
  double eps = 0.05;
  int grid_size = 512;
  long grid_factor = 4;
  std::vector<double> delta_list = {0.1, 0.25, 0.5};
  std::int64_t limit = 100000;
  long k_max = 3;
  // Files are written as output_path + ".csv" / ".json".
  std::string output_path;
  OutputFormat format = OutputFormat::csv;
  bool include_nonsplit = true;
  bool dump_sums = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

// Empty when valid, else the first violated precondition.
std::optional<std::string> validate(const ExperimentConfig& config);

// Validate, compute, and write the report files. Diagnostics go to log.
int run(const ExperimentConfig& config, std::ostream& log);

}  // namespace heckelab
