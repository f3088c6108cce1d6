#include "qrep/psi.hpp"

#include "qrep/errors.hpp"
#include "qrep/number_theory.hpp"

#include <string>
#include <utility>

namespace qrep {

int chi_minus4(std::int64_t n)
{
    switch (positive_mod(n, 4)) {
    case 1: return 1;
    case 3: return -1;
    default: return 0;
    }
}

namespace {

bool is_pm1(std::int64_t x, std::int64_t n)
{
    const auto r = positive_mod(x, n);
    return r == 1 || r == n - 1;
}

int either_pm1(std::int64_t a, std::int64_t b, std::int64_t n) { return is_pm1(a, n) || is_pm1(b, n) ? 1 : -1; }

// Divides a and b by the power of p that exactly divides gcd(a, b).
void strip_common(std::int64_t& a, std::int64_t& b, std::int64_t p)
{
    while (a % p == 0 && b % p == 0) {
        a /= p;
        b /= p;
    }
}

} // namespace

PsiCharacter::PsiCharacter(std::int64_t level) : level_(level)
{
    switch (level) {
    case 5:
    case 8: rule_ = Rule::prime_power; break;
    case 10: rule_ = Rule::level10; break;
    case 12: rule_ = Rule::level12; break;
    default: throw DomainError("psi is defined for levels 5, 8, 10, 12, not " + std::to_string(level));
    }
}

PsiCharacter PsiCharacter::trivial(std::int64_t level)
{
    PsiCharacter p(level);
    p.rule_ = Rule::trivial;
    return p;
}

int PsiCharacter::base(std::int64_t b) const
{
    if (gcd(b, level_) != 1) throw DomainError("psi_" + std::to_string(level_) + " needs b coprime to the level, got " + std::to_string(b));
    if (rule_ == Rule::trivial) return 1;
    return is_pm1(b, level_) ? 1 : -1;
}

int PsiCharacter::pair(std::int64_t a, std::int64_t b) const
{
    if (a < 1 || b < 1) throw DomainError("psi(a, b) needs a, b >= 1");
    switch (rule_) {
    case Rule::trivial: return 1;
    case Rule::prime_power:
        strip_common(a, b, level_ == 5 ? 5 : 2);
        return either_pm1(a, b, level_);
    case Rule::level12:
    case Rule::level10: break;
    }

    const std::int64_t other = rule_ == Rule::level12 ? 3 : 5;
    strip_common(a, b, 2);
    strip_common(a, b, other);
    if (a % 2 != 0 && b % 2 != 0) return either_pm1(a, b, level_);
    if (a % 2 != 0) std::swap(a, b); // now a even, b odd
    const int k = valuation(a, 2);
    const std::int64_t odd = a >> k;
    const int sign_k = k % 2 == 0 ? 1 : -1;
    if (rule_ == Rule::level12) {
        if (gcd(6, b) == 1) return base(b);
        // i^{b+1} with b odd: +1 for b = 3 mod 4, -1 for b = 1 mod 4.
        const int ib = positive_mod(b, 4) == 3 ? 1 : -1;
        return sign_k * ib * chi_minus4(odd) * base(odd);
    }
    if (gcd(10, b) == 1) return base(b);
    return sign_k * base(odd);
}

int psi_base(std::int64_t level, std::int64_t b) { return PsiCharacter(level).base(b); }
int psi_pair(std::int64_t level, std::int64_t a, std::int64_t b) { return PsiCharacter(level).pair(a, b); }

} // namespace qrep
