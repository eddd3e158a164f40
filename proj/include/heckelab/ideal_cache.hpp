#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "heckelab/gaussian.hpp"

namespace heckelab {

inline constexpr int kIdealCacheFormatVersion = 1;

// CSV with columns p,a,b,norm,splitting,theta; theta written with 17
// significant digits so the file round-trips doubles exactly.
void write_ideal_csv(std::ostream& out, std::span<const GaussianPrimeIdeal> ideals);
std::vector<GaussianPrimeIdeal> read_ideal_csv(std::istream& in);

// Directory of cached enumerations keyed by (norm_min, norm_max, version).
class IdealCache {
 public:
  explicit IdealCache(std::filesystem::path dir);

  std::filesystem::path path_for(std::int64_t norm_min, std::int64_t norm_max) const;
  std::optional<std::vector<GaussianPrimeIdeal>> load(std::int64_t norm_min,
                                                      std::int64_t norm_max) const;
  void store(std::int64_t norm_min, std::int64_t norm_max,
             std::span<const GaussianPrimeIdeal> ideals) const;

  // Load if cached, else enumerate (nonsplit included) and store.
  std::vector<GaussianPrimeIdeal> get(std::int64_t norm_min, std::int64_t norm_max) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace heckelab
