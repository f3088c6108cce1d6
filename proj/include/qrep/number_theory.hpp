#pragma once

#include <cstdint>
#include <vector>

namespace qrep {

/// Möbius function; n must be positive.
int mobius(std::int64_t n);

/// Positive divisors of n in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Exponent of the prime p in n (n != 0).
int valuation(std::int64_t n, std::int64_t p);

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Representative of a mod m in [0, m).
std::int64_t positive_mod(std::int64_t a, std::int64_t m);

/// Sum of d^k over positive divisors d of n.
std::int64_t divisor_sigma(std::int64_t n, int k);

} // namespace qrep
