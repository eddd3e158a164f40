#include "heckelab/sieve.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "heckelab/modular.hpp"

namespace heckelab {

namespace {

constexpr std::int64_t kSegmentOdds = 1 << 15;

// Odd primes up to limit by the plain sieve, used as sieving primes.
std::vector<std::int64_t> small_odd_primes(std::int64_t limit) {
  std::vector<std::int64_t> out;
  if (limit < 3) return out;
  // index i <-> 2i + 1
  std::vector<char> composite(static_cast<std::size_t>(limit / 2 + 1), 0);
  for (std::int64_t i = 1; 2 * i + 1 <= limit; ++i) {
    if (composite[i]) continue;
    const std::int64_t p = 2 * i + 1;
    out.push_back(p);
    for (std::int64_t m = p * p; m <= limit; m += 2 * p) composite[m / 2] = 1;
  }
  return out;
}

}  // namespace

std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  lo = std::max<std::int64_t>(lo, 1);
  if (hi <= lo || hi < 2) return out;
  if (lo < 2) out.push_back(2);

  const auto base = small_odd_primes(isqrt(hi));

  // Odd numbers n in (lo, hi]; segment s covers odds first .. first + 2(len-1).
  std::int64_t first = lo + 1;
  if (first % 2 == 0) ++first;
  if (first < 3) first = 3;

  std::vector<char> composite(kSegmentOdds);
  for (std::int64_t seg_lo = first; seg_lo <= hi; seg_lo += 2 * kSegmentOdds) {
    const std::int64_t seg_hi = std::min(hi, seg_lo + 2 * (kSegmentOdds - 1));
    const std::int64_t len = (seg_hi - seg_lo) / 2 + 1;
    std::fill(composite.begin(), composite.begin() + len, 0);
    for (const std::int64_t p : base) {
      if (p * p > seg_hi) break;
      std::int64_t start = std::max(p * p, (seg_lo + p - 1) / p * p);
      if (start % 2 == 0) start += p;
      for (std::int64_t m = start; m <= seg_hi; m += 2 * p) composite[(m - seg_lo) / 2] = 1;
    }
    for (std::int64_t i = 0; i < len; ++i)
      if (!composite[i]) out.push_back(seg_lo + 2 * i);
  }
  return out;
}

std::vector<std::int64_t> sieve_rational_primes(std::int64_t limit) {
  return primes_in_range(0, limit);
}

}  // namespace heckelab
