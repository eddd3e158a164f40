#pragma once

#include <cstdint>
#include <vector>

namespace heckelab {

// All primes in [2, limit], ascending.
std::vector<std::int64_t> sieve_rational_primes(std::int64_t limit);

// Primes p with lo < p <= hi, ascending. Segmented odd-only sieve; memory is
// O(sqrt(hi) + segment) regardless of the range length.
std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

}  // namespace heckelab
