#include "heckelab/real_quadratic.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "heckelab/errors.hpp"
#include "heckelab/modular.hpp"
#include "heckelab/sieve.hpp"
#include "heckelab/summation.hpp"

namespace heckelab::realquad {

namespace {

__extension__ typedef __int128 i128;

std::int64_t norm_of(std::int64_t a, std::int64_t b) { return a * a - 2 * b * b; }

// log|alpha / alpha~| without reduction, evaluated through whichever of
// alpha, alpha~ is larger so the subtraction a - b sqrt 2 never cancels.
double raw_log_ratio(std::int64_t a, std::int64_t b) {
  const std::int64_t n = norm_of(a, b);
  if (n == 0) throw BadInput("angle_t: a^2 - 2b^2 must be nonzero");
  const double big = std::log(static_cast<double>(std::llabs(a)) +
                              static_cast<double>(std::llabs(b)) * std::numbers::sqrt2);
  const double log_n = std::log(static_cast<double>(std::llabs(n)));
  const bool same_sign = (a >= 0) == (b >= 0) || a == 0 || b == 0;
  return same_sign ? 2.0 * big - log_n : log_n - 2.0 * big;
}

double reduce_period(double x) {
  double t = x - kPeriod * std::floor(x / kPeriod);
  if (t >= kPeriod) t -= kPeriod;
  if (t < 0.0) t += kPeriod;
  return t;
}

NormSolution canonical_ideal(std::int64_t p, std::int64_t a, std::int64_t b) {
  NormSolution s = reduce_generator(a, b);
  if (s.sign < 0) s = reduce_generator(s.a, -s.b);
  if (norm_of(s.a, s.b) != p || s.sign != 1 || s.a <= 0 || s.b < 0)
    throw BadInput("solve_norm_equation: failed to verify a^2 - 2b^2 = p for " +
                   std::to_string(p));
  return s;
}

void check_split(std::int64_t p) {
  if (p < 3 || p % 2 == 0) throw BadInput("solve_norm_equation: need an odd prime");
  const std::int64_t r = p % 8;
  if (r != 1 && r != 7) throw NotSplit(std::to_string(p) + " is not split in Q(sqrt 2)");
}

NormSolution brute_force(std::int64_t p) {
  const std::int64_t b_max = isqrt(p);
  for (std::int64_t b = 0; b <= b_max; ++b) {
    const std::int64_t sq = p + 2 * b * b;
    const std::int64_t a = isqrt(sq);
    if (a * a == sq) return canonical_ideal(p, a, b);
  }
  for (std::int64_t b = 1; b <= b_max; ++b) {
    const std::int64_t sq = 2 * b * b - p;
    if (sq <= 0) continue;
    const std::int64_t a = isqrt(sq);
    if (a * a == sq) return canonical_ideal(p, a, b);
  }
  throw BadInput("solve_norm_equation: no solution found for " + std::to_string(p));
}

// Shortest vector of the lattice {(a, b) : a + b r = 0 mod p} under
// a^2 + 2b^2. It has a^2 + 2b^2 < 1.81 p, so its norm is +-p.
NormSolution lattice_descent(std::int64_t p) {
  const std::int64_t r = sqrt_mod(2, p);
  auto q = [](i128 a, i128 b) { return a * a + 2 * b * b; };
  auto dot = [](i128 a1, i128 b1, i128 a2, i128 b2) { return a1 * a2 + 2 * b1 * b2; };
  i128 ua = p, ub = 0, va = -r, vb = 1;
  if (q(ua, ub) < q(va, vb)) {
    std::swap(ua, va);
    std::swap(ub, vb);
  }
  while (true) {
    const i128 qv = q(va, vb);
    const i128 num = 2 * dot(ua, ub, va, vb) + qv;
    const i128 den = 2 * qv;
    i128 mu = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --mu;
    ua -= mu * va;
    ub -= mu * vb;
    if (q(ua, ub) >= qv) break;
    std::swap(ua, va);
    std::swap(ub, vb);
  }
  return canonical_ideal(p, static_cast<std::int64_t>(va), static_cast<std::int64_t>(vb));
}

}  // namespace

NormSolution apply_unit(NormSolution s, int n) {
  for (; n > 0; --n) s = {s.a + 2 * s.b, s.a + s.b, -s.sign};
  for (; n < 0; ++n) s = {-s.a + 2 * s.b, s.a - s.b, -s.sign};
  return s;
}

NormSolution reduce_generator(std::int64_t a, std::int64_t b) {
  const std::int64_t n = norm_of(a, b);
  if (n == 0) throw BadInput("reduce_generator: zero element");
  NormSolution s{a, b, n > 0 ? 1 : -1};
  const double raw = raw_log_ratio(a, b);
  s = apply_unit(s, -static_cast<int>(std::floor(raw / kPeriod)));
  // Rounding at the period boundary: step once more if needed.
  double t = raw_log_ratio(s.a, s.b);
  if (t < 0.0) {
    s = apply_unit(s, 1);
  } else if (t >= kPeriod) {
    s = apply_unit(s, -1);
  }
  if (s.a < 0) {
    s.a = -s.a;
    s.b = -s.b;
  }
  return s;
}

double angle_t(std::int64_t a, std::int64_t b) { return reduce_period(raw_log_ratio(a, b)); }

double conjugate_t(double t) { return reduce_period(kPeriod - t); }

NormSolution solve_norm_equation(std::int64_t p, Solver solver) {
  check_split(p);
  return solver == Solver::brute_force ? brute_force(p) : lattice_descent(p);
}

std::vector<RealQuadPrimeIdeal> split_prime_ideals(std::int64_t limit, Solver solver) {
  std::vector<RealQuadPrimeIdeal> out;
  for (const std::int64_t p : sieve_rational_primes(limit)) {
    if (p % 8 != 1 && p % 8 != 7) continue;
    const NormSolution s = solve_norm_equation(p, solver);
    const NormSolution c = reduce_generator(s.a, -s.b);
    if (norm_of(c.a, c.b) != c.sign * p)
      throw BadInput("split_prime_ideals: conjugate failed verification at " + std::to_string(p));
    out.push_back({p, s.a, s.b, s.sign, angle_t(s.a, s.b)});
    out.push_back({p, c.a, c.b, c.sign, angle_t(c.a, c.b)});
  }
  return out;
}

std::map<long, std::complex<double>> equidistribution_report_real(std::int64_t limit, long k_max,
                                                                  Solver solver) {
  if (limit < 17) throw BadInput("equidistribution_report_real: need limit >= 17");
  if (k_max < 0) throw BadInput("equidistribution_report_real: need k_max >= 0");
  const auto ideals = split_prime_ideals(limit, solver);
  const auto count = static_cast<double>(ideals.size());
  std::map<long, std::complex<double>> out;
  out[0] = {1.0, 0.0};
  for (long k = 1; k <= k_max; ++k) {
    CompensatedComplexSum sum;
    for (const auto& g : ideals)
      sum.add(std::polar(1.0, std::numbers::pi * static_cast<double>(k) * g.t / kLogUnit));
    out[k] = sum.value() / count;
  }
  return out;
}

}  // namespace heckelab::realquad
