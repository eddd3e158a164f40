#include "heckelab/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "heckelab/errors.hpp"
#include "heckelab/modular.hpp"
#include "heckelab/sieve.hpp"

namespace heckelab {

std::string_view to_string(Splitting s) {
  switch (s) {
    case Splitting::split:
      return "split";
    case Splitting::ramified:
      return "ramified";
    case Splitting::inert:
      return "inert";
  }
  return "?";
}

Splitting splitting_from_string(std::string_view s) {
  if (s == "split") return Splitting::split;
  if (s == "ramified") return Splitting::ramified;
  if (s == "inert") return Splitting::inert;
  throw BadInput("unknown splitting type '" + std::string(s) + "'");
}

std::pair<std::int64_t, std::int64_t> normalize_associate(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) throw BadInput("zero has no associate class");
  // Multiplying by -i maps the quadrant a <= 0 < b onto a > 0, b >= 0.
  while (!(a > 0 && b >= 0)) {
    const std::int64_t na = b;
    const std::int64_t nb = -a;
    a = na;
    b = nb;
  }
  return {a, b};
}

double hecke_angle(std::int64_t a, std::int64_t b) {
  const auto [x, y] = normalize_associate(a, b);
  return std::atan2(static_cast<double>(y), static_cast<double>(x));
}

std::pair<std::int64_t, std::int64_t> cornacchia(std::int64_t p) {
  if (p < 5 || p % 4 != 1) throw BadInput("cornacchia: need a prime p = 1 mod 4");
  const std::int64_t r = sqrt_mod(-1, p);
  std::int64_t x = p;
  std::int64_t y = r;
  while (y * y > p) {
    const std::int64_t t = x % y;
    x = y;
    y = t;
  }
  std::int64_t a = y;
  std::int64_t b = isqrt(p - a * a);
  if (a * a + b * b != p) throw BadInput("cornacchia: " + std::to_string(p) + " is not prime");
  if (a % 2 == 0) std::swap(a, b);
  return {a, b};
}

namespace {

bool by_norm_then_angle(const GaussianPrimeIdeal& l, const GaussianPrimeIdeal& r) {
  return l.norm != r.norm ? l.norm < r.norm : l.theta < r.theta;
}

GaussianPrimeIdeal make_ideal(std::int64_t p, std::int64_t a, std::int64_t b,
                              Splitting splitting) {
  GaussianPrimeIdeal ideal;
  ideal.p = p;
  ideal.a = a;
  ideal.b = b;
  ideal.norm = a * a + b * b;
  ideal.splitting = splitting;
  ideal.theta = std::atan2(static_cast<double>(b), static_cast<double>(a));
  return ideal;
}

}  // namespace

std::vector<GaussianPrimeIdeal> enumerate_prime_ideals(std::int64_t norm_min,
                                                       std::int64_t norm_max,
                                                       EnumerationOptions options) {
  std::vector<GaussianPrimeIdeal> out;
  if (norm_min < 0 || norm_max < norm_min)
    throw BadInput("enumerate_prime_ideals: need 0 <= norm_min <= norm_max");
  if (norm_max == norm_min) return out;

  for (const std::int64_t p : primes_in_range(norm_min, norm_max)) {
    if (p == 2) {
      if (options.include_nonsplit) out.push_back(make_ideal(2, 1, 1, Splitting::ramified));
    } else if (p % 4 == 1) {
      const auto [a, b] = cornacchia(p);
      // a + bi and the normalized conjugate i(a - bi) = b + ai.
      out.push_back(make_ideal(p, a, b, Splitting::split));
      out.push_back(make_ideal(p, b, a, Splitting::split));
    }
  }
  if (options.include_nonsplit) {
    for (const std::int64_t q : primes_in_range(isqrt(norm_min), isqrt(norm_max))) {
      if (q % 4 == 3 && q * q > norm_min) out.push_back(make_ideal(q, q, 0, Splitting::inert));
    }
  }
  std::sort(out.begin(), out.end(), by_norm_then_angle);
  return out;
}

std::vector<LambdaEntry> lambda_entries(std::int64_t norm_min, std::int64_t norm_max) {
  std::vector<LambdaEntry> out;
  if (norm_min < 0 || norm_max < norm_min)
    throw BadInput("lambda_entries: need 0 <= norm_min <= norm_max");
  if (norm_max == norm_min) return out;

  for (const auto& ideal : enumerate_prime_ideals(norm_min, norm_max)) {
    out.push_back({ideal, 1, ideal.norm, ideal.theta, std::log(static_cast<double>(ideal.norm))});
  }

  // Higher powers come from bases of norm <= sqrt(norm_max).
  for (const auto& base : enumerate_prime_ideals(0, isqrt(norm_max))) {
    const double weight = std::log(static_cast<double>(base.norm));
    std::int64_t x = base.a;
    std::int64_t y = base.b;
    std::int64_t norm = base.norm;
    for (int r = 2; norm <= norm_max / base.norm; ++r) {
      const std::int64_t nx = x * base.a - y * base.b;
      const std::int64_t ny = x * base.b + y * base.a;
      x = nx;
      y = ny;
      norm *= base.norm;
      if (norm <= norm_min) continue;
      const auto [u, v] = normalize_associate(x, y);
      x = u;
      y = v;
      out.push_back({base, r, norm, std::atan2(static_cast<double>(v), static_cast<double>(u)),
                     weight});
    }
  }
  std::sort(out.begin(), out.end(), [](const LambdaEntry& l, const LambdaEntry& r) {
    return l.norm != r.norm ? l.norm < r.norm : l.theta < r.theta;
  });
  return out;
}

}  // namespace heckelab
