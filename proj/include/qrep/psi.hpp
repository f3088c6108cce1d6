#pragma once

#include <cstdint>

namespace qrep {

/// Jacobi symbol (-1/n): 1, 0, -1, 0 on n = 1, 2, 3, 0 mod 4.
int chi_minus4(std::int64_t n);

/// The +-1 character psi_N on (Z/N)^x and its two-argument extension psi(a, b).
///
/// Levels 5 and 8 divide out the exact power of 5 (resp. 2) shared by a and b
/// and ask whether either quotient is +-1 mod N. Levels 10 and 12 divide out
/// the shared 2^x 5^y (resp. 2^x 3^y) and then split on the parity of a and b.
/// The trivial character returns 1 everywhere and exists to show that the
/// nontrivial rules are needed.
class PsiCharacter {
public:
    enum class Rule { prime_power, level12, level10, trivial };

    /// Throws DomainError for N outside {5, 8, 10, 12}.
    explicit PsiCharacter(std::int64_t level);
    static PsiCharacter trivial(std::int64_t level);

    std::int64_t level() const { return level_; }
    Rule rule() const { return rule_; }

    /// psi_N(b): 1 iff b = +-1 mod N. Throws DomainError unless gcd(b, N) = 1.
    int base(std::int64_t b) const;
    /// psi(a, b) for a, b >= 1.
    int pair(std::int64_t a, std::int64_t b) const;

private:
    PsiCharacter(std::int64_t level, Rule rule) : level_(level), rule_(rule) {}

    std::int64_t level_;
    Rule rule_;
};

int psi_base(std::int64_t level, std::int64_t b);
int psi_pair(std::int64_t level, std::int64_t a, std::int64_t b);

} // namespace qrep
