#pragma once

#include "qrep/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qrep {

/// Truncated Laurent series in q with exact rational coefficients.
///
/// Coefficients are stored densely for exponents in [valuation, order).
/// Everything at or above `order` is unknown: reading it throws
/// PrecisionError instead of returning zero. Exponents below the valuation
/// are known to be zero.
///
/// Values are immutable; every operation returns a new series whose order is
/// the tightest one implied by the inputs.
class LaurentSeries {
public:
    /// Coefficients for exponents valuation, valuation+1, ...; order is
    /// valuation + coeffs.size(). Throws PrecisionError when coeffs is empty.
    LaurentSeries(std::int64_t valuation, std::vector<Rational> coeffs);

    static LaurentSeries zero(std::int64_t valuation, std::int64_t order);
    static LaurentSeries constant(const Rational& c, std::int64_t order);
    static LaurentSeries monomial(const Rational& c, std::int64_t exponent, std::int64_t order);
    /// Convenience for integer coefficient lists, mostly for tests.
    static LaurentSeries from_integers(std::int64_t valuation, std::initializer_list<long> coeffs);

    std::int64_t valuation() const { return valuation_; }
    std::int64_t order() const { return valuation_ + static_cast<std::int64_t>(coeffs_.size()); }
    std::span<const Rational> coefficients() const { return coeffs_; }

    /// Coefficient of q^exponent. Zero below the valuation, PrecisionError at
    /// or above the order.
    Rational coefficient(std::int64_t exponent) const;
    const Rational& operator[](std::int64_t exponent) const;

    /// Exponent of the first nonzero coefficient, or order() if all known
    /// coefficients vanish.
    std::int64_t leading_exponent() const;
    bool is_zero() const;
    bool is_integral() const;
    /// Integer view; throws DomainError if any denominator differs from 1.
    std::vector<Integer> integer_coefficients() const;

    /// Drops known-zero leading coefficients (valuation moves up, order kept).
    LaurentSeries trimmed() const;
    /// Keeps only exponents < new_order. Throws if new_order > order().
    LaurentSeries truncated(std::int64_t new_order) const;
    /// Same series stored over [new_valuation, new_order); new_valuation may
    /// only drop below the first nonzero coefficient.
    LaurentSeries reframed(std::int64_t new_valuation, std::int64_t new_order) const;
    /// Multiplication by q^k.
    LaurentSeries shifted(std::int64_t k) const;

    /// True when both series agree on every exponent known to both.
    bool agrees_with(const LaurentSeries& other) const;

    /// Exact structural equality (same window, same coefficients).
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

    std::string to_string() const;

private:
    std::int64_t valuation_;
    std::vector<Rational> coeffs_;
};

LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries operator-(const LaurentSeries& f);
LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries operator*(const Rational& c, const LaurentSeries& f);

/// Product truncated to exponents < max_order (in addition to the natural
/// truncation); used to avoid computing coefficients that are thrown away.
LaurentSeries multiply_truncated(const LaurentSeries& f, const LaurentSeries& g, std::int64_t max_order);

LaurentSeries invert(const LaurentSeries& f);
LaurentSeries pow(const LaurentSeries& f, std::int64_t k);
LaurentSeries exp(const LaurentSeries& f);
LaurentSeries log(const LaurentSeries& f);

/// Hecke U_n on q-expansions: coefficient m of the result is coefficient nm of f.
LaurentSeries hecke_u(const LaurentSeries& f, std::int64_t n);
/// f(q^k): exponent e moves to k*e.
LaurentSeries substitute_power(const LaurentSeries& f, std::int64_t k);

/// Coefficientwise multiplication by a periodic table: a_m -> table[m mod P] a_m.
LaurentSeries twist(const LaurentSeries& f, std::span<const Rational> table);

namespace twists {
/// Jacobi symbol (-1/n), period 4.
std::vector<Rational> chi_minus4();
/// Trivial character mod 2 (keeps odd exponents).
std::vector<Rational> chi0_mod2();
/// (-1)^m, i.e. f(z + 1/2).
std::vector<Rational> sign();
} // namespace twists

} // namespace qrep
