#pragma once

#include "qrep/laurent_series.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <variant>
#include <vector>

namespace qrep {

/// prod_d (q^{d/24} prod_{n>=1} (1 - q^{dn}))^{e_d}, times q^leading_power.
struct EtaQuotient {
    std::vector<std::pair<std::int64_t, std::int64_t>> terms; // (scale d, exponent e)
    Rational leading_power = 0;
};

/// q^leading_power prod_{n>=1} (1 - q^n)^{e(n mod M)}; classes missing from
/// the table have exponent 0.
struct ResidueProduct {
    std::int64_t modulus = 1;
    std::map<std::int64_t, std::int64_t> exponents;
    Rational leading_power = 0;
};

using ProductFormulaSpec = std::variant<EtaQuotient, ResidueProduct>;

/// Total power of q in front of the product. Throws DomainError when it is
/// not an integer or the formula is malformed.
std::int64_t leading_exponent(const ProductFormulaSpec& spec);

/// Exponent of (1 - q^n) in the expanded product, for n >= 1.
std::int64_t factor_exponent(const ProductFormulaSpec& spec, std::int64_t n);

/// Expansion with coefficients known for every exponent below `order`.
LaurentSeries expand_product_formula(const ProductFormulaSpec& spec, std::int64_t order);

/// f / c minus its constant term, where c is the coefficient of q^-1.
LaurentSeries normalize_hauptmodul(const LaurentSeries& f);

/// J = E4^3 / Delta - 744, known for exponents below `order`.
LaurentSeries big_j(std::int64_t order);

} // namespace qrep
