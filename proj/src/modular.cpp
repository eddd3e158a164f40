#include "heckelab/modular.hpp"

#include <cmath>
#include <string>

#include "heckelab/errors.hpp"

namespace heckelab {

namespace {
// GCC/Clang builtin; __extension__ keeps -Wpedantic quiet.
__extension__ typedef __int128 i128;
}  // namespace

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  const i128 r = static_cast<i128>(a) * b % m;
  return static_cast<std::int64_t>(r < 0 ? r + m : r);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t result = 1 % m;
  base %= m;
  if (base < 0) base += m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::int64_t isqrt(std::int64_t n) {
  if (n <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::int64_t sqrt_mod(std::int64_t n, std::int64_t p) {
  if (p < 3 || p % 2 == 0) throw BadInput("sqrt_mod: modulus must be an odd prime");
  n %= p;
  if (n < 0) n += p;
  if (n == 0) throw BadInput("sqrt_mod: gcd(n, p) must be 1");
  if (pow_mod(n, (p - 1) / 2, p) != 1)
    throw NonResidue("sqrt_mod: " + std::to_string(n) + " is not a square mod " +
                     std::to_string(p));

  std::int64_t r;
  if (p % 4 == 3) {
    r = pow_mod(n, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks: p - 1 = q 2^s with q odd.
    std::int64_t q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
      q /= 2;
      ++s;
    }
    std::int64_t z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::int64_t c = pow_mod(z, q, p);
    std::int64_t t = pow_mod(n, q, p);
    r = pow_mod(n, (q + 1) / 2, p);
    int m = s;
    while (t != 1) {
      int i = 0;
      std::int64_t t2 = t;
      while (t2 != 1) {
        t2 = mul_mod(t2, t2, p);
        ++i;
      }
      std::int64_t b = c;
      for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
      r = mul_mod(r, b, p);
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      m = i;
    }
  }
  return r <= p - r ? r : p - r;
}

}  // namespace heckelab
