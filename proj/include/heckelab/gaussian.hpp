#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace heckelab {

inline constexpr double kHalfPi = 1.57079632679489661923;

enum class Splitting { split, ramified, inert };

std::string_view to_string(Splitting s);
Splitting splitting_from_string(std::string_view s);

// A prime ideal of Z[i] with its normalized generator a + bi (a > 0, b >= 0)
// and Hecke angle theta = atan2(b, a) in [0, pi/2).
struct GaussianPrimeIdeal {
  std::int64_t p = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t norm = 0;
  Splitting splitting = Splitting::split;
  double theta = 0.0;

  friend bool operator==(const GaussianPrimeIdeal&, const GaussianPrimeIdeal&) = default;
};

// The prime-power ideal base^r with von Mangoldt weight log N(base).
struct LambdaEntry {
  GaussianPrimeIdeal base;
  int r = 1;
  std::int64_t norm = 0;
  double theta = 0.0;
  double weight = 0.0;
};

// Rotate a nonzero Gaussian integer by a unit so that a > 0, b >= 0.
std::pair<std::int64_t, std::int64_t> normalize_associate(std::int64_t a, std::int64_t b);

// Angle of the normalized associate of a + bi, in [0, pi/2).
double hecke_angle(std::int64_t a, std::int64_t b);

// p = a^2 + b^2 with a odd, b even, both positive. Requires p = 1 mod 4 prime.
std::pair<std::int64_t, std::int64_t> cornacchia(std::int64_t p);

struct EnumerationOptions {
  // Include the ramified ideal (1+i) and the inert ideals (q), q = 3 mod 4.
  bool include_nonsplit = true;
};

// Prime ideals with norm_min < N <= norm_max, sorted by (norm, theta).
std::vector<GaussianPrimeIdeal> enumerate_prime_ideals(std::int64_t norm_min,
                                                       std::int64_t norm_max,
                                                       EnumerationOptions options = {});

// All prime-power ideals p^r (r >= 1) with norm_min < N <= norm_max, sorted by
// (norm, theta). Nonsplit bases are always included.
std::vector<LambdaEntry> lambda_entries(std::int64_t norm_min, std::int64_t norm_max);

}  // namespace heckelab
