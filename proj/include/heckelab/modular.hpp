#pragma once

#include <cstdint>

namespace heckelab {

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);

// Square root of n modulo an odd prime p (Tonelli-Shanks). Returns the
// smaller of the two roots r, p - r. Throws NonResidue if n is not a square
// mod p, BadInput if p divides n or p is not an odd number > 2.
std::int64_t sqrt_mod(std::int64_t n, std::int64_t p);

// Integer square root: largest r with r*r <= n.
std::int64_t isqrt(std::int64_t n);

}  // namespace heckelab
