#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "heckelab/gaussian.hpp"

namespace heckelab {

// Sorted Hecke angles of a fixed set of prime ideals; answers sector queries
// by binary search.
class AngleSet {
 public:
  explicit AngleSet(std::span<const GaussianPrimeIdeal> ideals);
  explicit AngleSet(std::vector<double> angles);

  // Ideals with theta in (beta, beta + gamma], read mod pi/2.
  std::int64_t count(double beta, double gamma) const;
  std::size_t size() const { return angles_.size(); }
  std::span<const double> sorted() const { return angles_; }

 private:
  std::int64_t count_above(double x) const;
  std::int64_t count_at_most(double x) const;

  std::vector<double> angles_;
};

// Count of prime ideals with norm in (norm_min, norm_max] and angle in the
// half-open sector (beta, beta + gamma] (wrapping mod pi/2).
std::int64_t sector_count(double beta, double gamma, std::int64_t norm_min,
                          std::int64_t norm_max, EnumerationOptions options = {});

enum class ExpectationMode { empirical, pit };

// Empirical: (gamma/(pi/2)) * total ideal count. PIT: (gamma/(pi/2)) times the
// integral of dt/log t over (norm_min, norm_max].
double expected_count(double gamma, std::int64_t norm_min, std::int64_t norm_max,
                      ExpectationMode mode, EnumerationOptions options = {});

// Integral of dt / log t over [lo, hi] (lo > 1).
double log_integral(double lo, double hi);

struct SectorScanReport {
  double X = 0.0;
  double rho = 0.0;
  double gamma = 0.0;
  int grid_size = 0;
  std::int64_t total = 0;
  std::vector<double> betas;
  std::vector<std::int64_t> counts;
  double expected = 0.0;
  std::vector<double> deviations;
  // delta -> fraction of grid offsets with |deviation| > delta.
  std::map<double, double> exceptional_fraction;
};

// Sectors of width gamma = (pi/2) X^-rho at beta_j = j (pi/2)/M over the
// ideals with X < N <= 2X.
SectorScanReport sector_scan(double X, double rho, int grid_size,
                             std::span<const double> delta_list,
                             EnumerationOptions options = {});

struct ForbiddenRegionReport {
  std::int64_t norm_max = 0;
  double min_angle = 0.0;
  GaussianPrimeIdeal witness;
  // 1 / (2 sqrt(norm_max))
  double bound = 0.0;
  bool holds = false;
};

// Smallest nonzero angle among prime ideals with norm <= norm_max.
ForbiddenRegionReport forbidden_region_check(std::int64_t norm_max);

// Star discrepancy of {theta / (pi/2)} against the uniform law.
double star_discrepancy(std::span<const double> angles);
double discrepancy(std::int64_t norm_min, std::int64_t norm_max, EnumerationOptions options = {});

}  // namespace heckelab
