#pragma once

#include "qrep/laurent_series.hpp"

#include <cstdint>
#include <vector>

namespace qrep {

/// Truncated series in p whose coefficients are Laurent series in q.
///
/// Rows cover p-exponents [p_valuation, p_order). Every row is stored over
/// the same q window [q_low, q_high), so coefficient(i, j) is defined for
/// every i in the p range and j < q_high.
class BivariateSeries {
public:
    /// Rows may have different windows; they are reframed to the widest
    /// common one (lowest valuation, lowest order).
    BivariateSeries(std::int64_t p_valuation, std::vector<LaurentSeries> rows);

    std::int64_t p_valuation() const { return p_valuation_; }
    std::int64_t p_order() const { return p_valuation_ + static_cast<std::int64_t>(rows_.size()); }
    std::int64_t q_low() const { return q_low_; }
    std::int64_t q_high() const { return q_high_; }

    /// Row of p^i with its valuation at the first nonzero coefficient;
    /// PrecisionError at or above p_order, zero row below p_valuation.
    LaurentSeries row(std::int64_t i) const;
    Rational coefficient(std::int64_t p_exp, std::int64_t q_exp) const;

    /// Multiplication by p^k.
    BivariateSeries shifted_p(std::int64_t k) const;
    /// Restricts to p-exponents < p_order and q-exponents < q_high.
    BivariateSeries truncated(std::int64_t p_order, std::int64_t q_high) const;

    friend bool operator==(const BivariateSeries& a, const BivariateSeries& b);

private:
    std::int64_t p_valuation_;
    std::int64_t q_low_ = 0;
    std::int64_t q_high_ = 0;
    std::vector<LaurentSeries> rows_;
};

BivariateSeries operator+(const BivariateSeries& f, const BivariateSeries& g);
BivariateSeries operator-(const BivariateSeries& f, const BivariateSeries& g);
BivariateSeries operator-(const BivariateSeries& f);
BivariateSeries operator*(const BivariateSeries& f, const BivariateSeries& g);
BivariateSeries operator*(const Rational& c, const BivariateSeries& f);

/// exp in the p variable; every row with p-exponent <= 0 must vanish.
BivariateSeries exp(const BivariateSeries& f);
/// log in the p variable; the p^0 row must be the constant 1 and no
/// negative p-exponents may be present.
BivariateSeries log(const BivariateSeries& f);

} // namespace qrep
