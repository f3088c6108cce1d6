#include "qrep/number_theory.hpp"

#include "qrep/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qrep {

int mobius(std::int64_t n)
{
    if (n < 1) throw DomainError("mobius needs n >= 1, got " + std::to_string(n));
    int mu = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

std::vector<std::int64_t> divisors(std::int64_t n)
{
    if (n < 1) throw DomainError("divisors needs n >= 1, got " + std::to_string(n));
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int valuation(std::int64_t n, std::int64_t p)
{
    if (n == 0) throw DomainError("valuation of zero is undefined");
    if (p < 2) throw DomainError("valuation needs a prime p >= 2");
    int k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t positive_mod(std::int64_t a, std::int64_t m)
{
    const auto r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t divisor_sigma(std::int64_t n, int k)
{
    std::int64_t s = 0;
    for (auto d : divisors(n)) {
        std::int64_t term = 1;
        for (int i = 0; i < k; ++i) term *= d;
        s += term;
    }
    return s;
}

} // namespace qrep
