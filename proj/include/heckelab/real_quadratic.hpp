#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace heckelab::realquad {

// log(1 + sqrt 2)
inline constexpr double kLogUnit = 0.88137358701954302523;
// Period of the angle parameter t.
inline constexpr double kPeriod = 2.0 * kLogUnit;

struct NormSolution {
  std::int64_t a = 0;
  std::int64_t b = 0;
  int sign = 1;  // a^2 - 2 b^2 = sign * p
};

// A prime ideal of Z[sqrt 2] above a split p, with generator a + b sqrt 2
// reduced under the unit action so that t is in [0, 2 log eps).
struct RealQuadPrimeIdeal {
  std::int64_t p = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  int sign = 1;
  double t = 0.0;
};

enum class Solver { brute_force, fast };

// a^2 - 2 b^2 = sign * p with a > 0, b >= 0, t(a, b) in [0, 2 log eps). Of
// the two ideals above p the one whose reduced generator has positive norm
// is returned. NotSplit if p = +-3 mod 8.
NormSolution solve_norm_equation(std::int64_t p, Solver solver = Solver::brute_force);

// log|(a + b sqrt 2)/(a - b sqrt 2)| reduced into [0, 2 log eps).
double angle_t(std::int64_t a, std::int64_t b);

// Angle of the Galois-conjugate ideal.
double conjugate_t(double t);

// Multiply a + b sqrt 2 by eps^n (n may be negative).
NormSolution apply_unit(NormSolution s, int n);

// Reduced generator of the ideal generated by a + b sqrt 2.
NormSolution reduce_generator(std::int64_t a, std::int64_t b);

// Both ideals above every split p <= limit (canonical first, then conjugate).
std::vector<RealQuadPrimeIdeal> split_prime_ideals(std::int64_t limit,
                                                   Solver solver = Solver::fast);

// k -> (1/count) sum over ideals of exp(i pi k t / log eps), k = 0..k_max.
std::map<long, std::complex<double>> equidistribution_report_real(std::int64_t limit, long k_max,
                                                                  Solver solver = Solver::fast);

}  // namespace heckelab::realquad
