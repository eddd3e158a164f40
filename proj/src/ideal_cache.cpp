#include "heckelab/ideal_cache.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "heckelab/errors.hpp"

namespace heckelab {

namespace {

constexpr const char* kHeader = "p,a,b,norm,splitting,theta";

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void write_ideal_csv(std::ostream& out, std::span<const GaussianPrimeIdeal> ideals) {
  out << kHeader << '\n';
  for (const auto& g : ideals) {
    out << g.p << ',' << g.a << ',' << g.b << ',' << g.norm << ',' << to_string(g.splitting)
        << ',' << format_double(g.theta) << '\n';
  }
}

std::vector<GaussianPrimeIdeal> read_ideal_csv(std::istream& in) {
  std::vector<GaussianPrimeIdeal> out;
  std::string line;
  if (!std::getline(in, line) || line != kHeader) throw BadInput("ideal csv: bad header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field[6];
    for (auto& f : field) std::getline(row, f, ',');
    GaussianPrimeIdeal g;
    try {
      g.p = std::stoll(field[0]);
      g.a = std::stoll(field[1]);
      g.b = std::stoll(field[2]);
      g.norm = std::stoll(field[3]);
      g.splitting = splitting_from_string(field[4]);
      g.theta = std::stod(field[5]);
    } catch (const std::logic_error&) {
      throw BadInput("ideal csv: malformed row '" + line + "'");
    }
    out.push_back(g);
  }
  return out;
}

IdealCache::IdealCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path IdealCache::path_for(std::int64_t norm_min, std::int64_t norm_max) const {
  return dir_ / ("ideals_" + std::to_string(norm_min) + "_" + std::to_string(norm_max) + "_v" +
                 std::to_string(kIdealCacheFormatVersion) + ".csv");
}

std::optional<std::vector<GaussianPrimeIdeal>> IdealCache::load(std::int64_t norm_min,
                                                                std::int64_t norm_max) const {
  std::ifstream in(path_for(norm_min, norm_max));
  if (!in) return std::nullopt;
  return read_ideal_csv(in);
}

void IdealCache::store(std::int64_t norm_min, std::int64_t norm_max,
                       std::span<const GaussianPrimeIdeal> ideals) const {
  std::filesystem::create_directories(dir_);
  const auto path = path_for(norm_min, norm_max);
  const auto tmp = std::filesystem::path(path).concat(".tmp");
  {
    std::ofstream out(tmp);
    write_ideal_csv(out, ideals);
  }
  std::filesystem::rename(tmp, path);
}

std::vector<GaussianPrimeIdeal> IdealCache::get(std::int64_t norm_min,
                                                std::int64_t norm_max) const {
  if (auto cached = load(norm_min, norm_max)) return *std::move(cached);
  auto ideals = enumerate_prime_ideals(norm_min, norm_max);
  store(norm_min, norm_max, ideals);
  return ideals;
}

}  // namespace heckelab
