#include "qrep/product_formula.hpp"

#include "qrep/errors.hpp"
#include "qrep/number_theory.hpp"

#include <string>

namespace qrep {

namespace {

void validate(const EtaQuotient& eta)
{
    for (const auto& [d, e] : eta.terms)
        if (d < 1) throw DomainError("eta quotient scale must be positive, got " + std::to_string(d));
}

void validate(const ResidueProduct& rp)
{
    if (rp.modulus < 1) throw DomainError("residue product modulus must be positive, got " + std::to_string(rp.modulus));
    for (const auto& [g, e] : rp.exponents)
        if (g < 0 || g >= rp.modulus)
            throw DomainError("residue class " + std::to_string(g) + " is outside [0, " + std::to_string(rp.modulus) + ")");
}

// In-place multiplication of a power series (exponents 0..len-1) by
// (1 - q^n)^e using only integer updates.
void apply_factor(std::vector<Integer>& c, std::size_t n, std::int64_t e)
{
    const auto len = c.size();
    if (n >= len || e == 0) return;
    if (e > 0) {
        for (std::int64_t r = 0; r < e; ++r)
            for (std::size_t i = len - 1; i >= n; --i) c[i] -= c[i - n];
    } else {
        for (std::int64_t r = 0; r < -e; ++r)
            for (std::size_t i = n; i < len; ++i) c[i] += c[i - n];
    }
}

} // namespace

std::int64_t leading_exponent(const ProductFormulaSpec& spec)
{
    Rational total = std::visit(
        [](const auto& s) -> Rational {
            validate(s);
            Rational lp = s.leading_power;
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, EtaQuotient>)
                for (const auto& [d, e] : s.terms) lp += ratio(d * e, 24);
            return lp;
        },
        spec);
    total.canonicalize();
    if (!is_integer(total)) throw DomainError("non-integral leading exponent " + to_string(total));
    return total.get_num().get_si();
}

std::int64_t factor_exponent(const ProductFormulaSpec& spec, std::int64_t n)
{
    if (const auto* eta = std::get_if<EtaQuotient>(&spec)) {
        std::int64_t e = 0;
        for (const auto& [d, x] : eta->terms)
            if (n % d == 0) e += x;
        return e;
    }
    const auto& rp = std::get<ResidueProduct>(spec);
    const auto it = rp.exponents.find(positive_mod(n, rp.modulus));
    return it == rp.exponents.end() ? 0 : it->second;
}

LaurentSeries expand_product_formula(const ProductFormulaSpec& spec, std::int64_t order)
{
    const auto lead = leading_exponent(spec);
    if (order <= lead)
        throw PrecisionError("insufficient precision: product starts at q^" + std::to_string(lead) + " but order " +
                             std::to_string(order) + " was requested");
    const auto len = static_cast<std::size_t>(order - lead);
    std::vector<Integer> c(len);
    c[0] = 1;
    for (std::size_t n = 1; n < len; ++n) apply_factor(c, n, factor_exponent(spec, static_cast<std::int64_t>(n)));
    std::vector<Rational> coeffs(c.begin(), c.end());
    return LaurentSeries(lead, std::move(coeffs));
}

LaurentSeries normalize_hauptmodul(const LaurentSeries& f)
{
    const auto lead = f.leading_exponent();
    if (lead != -1)
        throw DomainError("not a simple pole at infinity: leading exponent is " +
                          (lead == f.order() ? std::string("unknown (all known coefficients vanish)") : std::to_string(lead)));
    if (f.order() < 1) throw PrecisionError("insufficient precision: normalization needs the constant term");
    const Rational scale = 1 / f[-1];
    const LaurentSeries g = scale * f;
    return g - LaurentSeries::constant(g[0], g.order());
}

LaurentSeries big_j(std::int64_t order)
{
    if (order < 1) throw PrecisionError("insufficient precision: J needs order >= 1");
    // 1/Delta = q^-1 prod (1 - q^n)^-24, needed below q^order.
    const LaurentSeries inv_delta = expand_product_formula(ResidueProduct{1, {{0, -24}}, -1}, order);
    // E4 is needed through q^order (multiplied by q^-1).
    std::vector<Rational> e4(static_cast<std::size_t>(order + 1));
    e4[0] = 1;
    for (std::int64_t n = 1; n <= order; ++n) e4[static_cast<std::size_t>(n)] = 240 * divisor_sigma(n, 3);
    const LaurentSeries E4(0, std::move(e4));
    const LaurentSeries j = E4 * E4 * E4 * inv_delta;
    const LaurentSeries J = j - LaurentSeries::constant(744, j.order());
    if (J[-1] != 1 || J[0] != 0) throw InternalError("J failed normalization: " + J.to_string());
    return J;
}

} // namespace qrep
