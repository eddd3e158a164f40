#include "heckelab/sectors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "heckelab/errors.hpp"
#include "heckelab/quadrature.hpp"

namespace heckelab {

namespace {

// Upper endpoints this close to pi/2 are taken to be pi/2, so aligned grids
// that accumulate rounding still close up exactly.
constexpr double kSnap = 4.0 * std::numeric_limits<double>::epsilon() * kHalfPi;

}  // namespace

AngleSet::AngleSet(std::span<const GaussianPrimeIdeal> ideals) {
  angles_.reserve(ideals.size());
  for (const auto& g : ideals) angles_.push_back(g.theta);
  std::sort(angles_.begin(), angles_.end());
}

AngleSet::AngleSet(std::vector<double> angles) : angles_(std::move(angles)) {
  std::sort(angles_.begin(), angles_.end());
}

std::int64_t AngleSet::count_at_most(double x) const {
  return std::upper_bound(angles_.begin(), angles_.end(), x) - angles_.begin();
}

std::int64_t AngleSet::count_above(double x) const {
  return static_cast<std::int64_t>(angles_.size()) - count_at_most(x);
}

std::int64_t AngleSet::count(double beta, double gamma) const {
  if (!(gamma > 0.0)) throw BadSector("sector width must be positive");
  if (gamma > kHalfPi + kSnap) throw BadSector("sector width exceeds pi/2");
  beta = std::fmod(beta, kHalfPi);
  if (beta < 0.0) beta += kHalfPi;
  const double upper = beta + gamma;
  if (upper < kHalfPi - kSnap) return count_at_most(upper) - count_at_most(beta);
  const double wrapped = std::max(0.0, upper - kHalfPi);
  return count_above(beta) + count_at_most(wrapped);
}

std::int64_t sector_count(double beta, double gamma, std::int64_t norm_min,
                          std::int64_t norm_max, EnumerationOptions options) {
  if (!(gamma > 0.0)) throw BadSector("sector width must be positive");
  const auto ideals = enumerate_prime_ideals(norm_min, norm_max, options);
  return AngleSet(ideals).count(beta, gamma);
}

double log_integral(double lo, double hi) {
  if (!(lo > 1.0) || hi < lo) throw BadInput("log_integral: need 1 < lo <= hi");
  QuadratureOptions opts;
  opts.abs_tol = 1e-10 * std::max(1.0, (hi - lo) / std::log(lo));
  return adaptive_simpson([](double t) { return 1.0 / std::log(t); }, lo, hi, opts).value;
}

double expected_count(double gamma, std::int64_t norm_min, std::int64_t norm_max,
                      ExpectationMode mode, EnumerationOptions options) {
  if (!(gamma > 0.0)) throw BadSector("sector width must be positive");
  const double share = gamma / kHalfPi;
  if (mode == ExpectationMode::empirical) {
    const auto n = enumerate_prime_ideals(norm_min, norm_max, options).size();
    return share * static_cast<double>(n);
  }
  return share * log_integral(static_cast<double>(std::max<std::int64_t>(norm_min, 2)),
                              static_cast<double>(norm_max));
}

SectorScanReport sector_scan(double X, double rho, int grid_size,
                             std::span<const double> delta_list, EnumerationOptions options) {
  if (!(X >= 2.0)) throw BadInput("sector_scan: need X >= 2");
  if (!(rho >= 0.0 && rho < 1.0)) throw BadInput("sector_scan: need 0 <= rho < 1");
  if (grid_size < 1) throw BadInput("sector_scan: need grid_size >= 1");

  const auto norm_min = static_cast<std::int64_t>(std::floor(X));
  const auto norm_max = static_cast<std::int64_t>(std::floor(2.0 * X));
  const auto ideals = enumerate_prime_ideals(norm_min, norm_max, options);
  const AngleSet angles(ideals);

  SectorScanReport report;
  report.X = X;
  report.rho = rho;
  report.gamma = kHalfPi * std::pow(X, -rho);
  report.grid_size = grid_size;
  report.total = static_cast<std::int64_t>(angles.size());
  report.expected = std::pow(X, -rho) * static_cast<double>(report.total);

  report.betas.resize(grid_size);
  report.counts.resize(grid_size);
  report.deviations.resize(grid_size);
  for (int j = 0; j < grid_size; ++j) {
    const double beta = static_cast<double>(j) * kHalfPi / grid_size;
    const std::int64_t c = angles.count(beta, report.gamma);
    report.betas[j] = beta;
    report.counts[j] = c;
    report.deviations[j] =
        report.expected > 0.0 ? (static_cast<double>(c) - report.expected) / report.expected : 0.0;
  }
  for (const double delta : delta_list) {
    const auto exceptional =
        std::count_if(report.deviations.begin(), report.deviations.end(),
                      [delta](double d) { return std::abs(d) > delta; });
    report.exceptional_fraction[delta] =
        static_cast<double>(exceptional) / static_cast<double>(grid_size);
  }
  return report;
}

ForbiddenRegionReport forbidden_region_check(std::int64_t norm_max) {
  if (norm_max < 2) throw BadInput("forbidden_region_check: need norm_max >= 2");
  ForbiddenRegionReport report;
  report.norm_max = norm_max;
  report.bound = 1.0 / (2.0 * std::sqrt(static_cast<double>(norm_max)));
  report.min_angle = kHalfPi;
  for (const auto& g : enumerate_prime_ideals(0, norm_max)) {
    if (g.theta > 0.0 && g.theta < report.min_angle) {
      report.min_angle = g.theta;
      report.witness = g;
    }
  }
  report.holds = report.min_angle > report.bound;
  return report;
}

double star_discrepancy(std::span<const double> angles) {
  if (angles.empty()) throw EmptyRange("discrepancy: no angles");
  std::vector<double> x(angles.begin(), angles.end());
  for (auto& v : x) v /= kHalfPi;
  std::sort(x.begin(), x.end());
  const auto n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double below = static_cast<double>(i) / n;
    const double upto = static_cast<double>(i + 1) / n;
    d = std::max({d, upto - x[i], x[i] - below});
  }
  return d;
}

double discrepancy(std::int64_t norm_min, std::int64_t norm_max, EnumerationOptions options) {
  const auto ideals = enumerate_prime_ideals(norm_min, norm_max, options);
  if (ideals.empty()) throw EmptyRange("discrepancy: no ideals in range");
  std::vector<double> angles;
  angles.reserve(ideals.size());
  for (const auto& g : ideals) angles.push_back(g.theta);
  return star_discrepancy(angles);
}

}  // namespace heckelab
