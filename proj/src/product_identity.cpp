#include "qrep/product_identity.hpp"

#include "qrep/errors.hpp"
#include "qrep/number_theory.hpp"

#include <algorithm>

namespace qrep {

namespace {

// Working q-order for the logarithm: exp over p-rows 0..P+1 loses about one
// q-exponent per row, on top of the -Q..Q window that is compared.
std::int64_t log_order(std::int64_t P, std::int64_t Q) { return Q + P + 2; }

void compare_bivariate(Report& r, const BivariateSeries& lhs, const BivariateSeries& rhs, std::int64_t P, std::int64_t Q)
{
    if (lhs.q_high() <= Q || rhs.q_high() <= Q || lhs.p_order() <= P || rhs.p_order() <= P)
        throw PrecisionError("insufficient precision: product identity window does not reach p^" + std::to_string(P) + " q^" +
                             std::to_string(Q));
    for (std::int64_t i = -1; i <= P; ++i)
        for (std::int64_t j = -Q; j <= Q; ++j) r.compare({{"p_exp", i}, {"q_exp", j}}, lhs.coefficient(i, j), rhs.coefficient(i, j));
}

void check_bounds(std::int64_t P, std::int64_t Q)
{
    if (P < 1 || Q < 1) throw DomainError("product checks need P, Q >= 1");
}

} // namespace

std::int64_t product_precision(std::int64_t P, std::int64_t Q) { return log_order(P, Q) + P + 1; }

std::int64_t product_family_bound(std::int64_t P, std::int64_t Q) { return (log_order(P, Q) - 1) * (P + 1); }

BivariateSeries dual_difference(const LaurentSeries& t, std::int64_t P, std::int64_t Q)
{
    check_bounds(P, Q);
    if (t.order() <= std::max(P, Q)) throw PrecisionError("insufficient precision: t(p) - t(q) needs t through q^" + std::to_string(std::max(P, Q)));
    const auto hi = Q + 1;
    std::vector<LaurentSeries> rows;
    rows.push_back(LaurentSeries::constant(t[-1], hi).reframed(-Q, hi));
    rows.push_back((-t.truncated(hi)).reframed(-Q, hi));
    for (std::int64_t n = 1; n <= P; ++n) rows.push_back(LaurentSeries::constant(t[n], hi).reframed(-Q, hi));
    return BivariateSeries(-1, std::move(rows));
}

Report faber_generating_check(const std::string& name, const LaurentSeries& t, std::int64_t P, std::int64_t Q)
{
    check_bounds(P, Q);
    Report r;
    r.check_id = "product1";
    r.param("function", name);
    r.param("p_order", P);
    r.param("q_order", Q);
    const auto qs = log_order(P, Q);
    const auto fam = faber_family(t, P + 1, qs);
    std::vector<LaurentSeries> rows;
    rows.push_back(LaurentSeries::zero(-(P + 1), qs + 1));
    for (const auto& x : fam) rows.push_back(-x.expansion);
    const BivariateSeries lhs = exp(BivariateSeries(0, std::move(rows))).shifted_p(-1);
    compare_bivariate(r, lhs, dual_difference(t, P, Q), P, Q);
    r.finalize();
    return r;
}

Report super_product_check(const CoefficientGrid& t, const CoefficientGrid& t0, const PsiCharacter& psi,
                           const ReplicateFamily& family_t, const ReplicateFamily& family_t0, std::int64_t P, std::int64_t Q)
{
    check_bounds(P, Q);
    Report r;
    r.check_id = "product2c";
    r.level = psi.level();
    r.param("function", t.function());
    r.param("companion", t0.function());
    r.param("psi", psi.rule() == PsiCharacter::Rule::trivial ? "trivial" : "level");
    r.param("p_order", P);
    r.param("q_order", Q);

    const auto qs = log_order(P, Q);
    const auto top = P + 1; // highest p-exponent of the logarithm
    // Coefficients of the logarithm, row per p-exponent 0..top, q in [-top, qs).
    std::vector<std::vector<Rational>> acc(static_cast<std::size_t>(top + 1), std::vector<Rational>(static_cast<std::size_t>(qs + top)));
    const auto add = [&](std::int64_t pe, std::int64_t qe, const Rational& v) {
        acc[static_cast<std::size_t>(pe)][static_cast<std::size_t>(qe + top)] += v;
    };
    for (std::int64_t s = 1; s <= top; ++s) {
        for (std::int64_t n = 1; s * n <= top; ++n) {
            // m = -1 contributes only at n = 1 (index mn = -1), with psi = 1.
            if (n == 1) {
                const Rational v = (family_t.get(s, -1) + family_t0.get(s, -1)) / (2 * s);
                add(s, -s, v);
            }
            for (std::int64_t m = 1; s * m < qs; ++m) {
                const auto k = m * n;
                if (!family_t.covers(s, k) || !family_t0.covers(s, k))
                    throw PrecisionError("replicate families do not reach F^(" + std::to_string(s) + ")_" + std::to_string(k));
                const Rational v = (psi.pair(s * m, s * n) * family_t.get(s, k) + family_t0.get(s, k)) / (2 * s);
                add(s * n, s * m, v);
            }
        }
    }
    std::vector<LaurentSeries> rows;
    for (auto& row : acc) {
        for (auto& x : row) x = -x;
        rows.emplace_back(-top, std::move(row));
    }
    const BivariateSeries lhs = exp(BivariateSeries(0, std::move(rows))).shifted_p(-1);

    // The base function: X_1(t) = t, so its coefficients are column 1 of the grid.
    const auto base_hi = std::min(t.m_max(), std::max(P, Q)) + 1;
    std::vector<Rational> base(static_cast<std::size_t>(base_hi + 1));
    base[0] = 1;
    for (std::int64_t m = 1; m < base_hi; ++m) base[static_cast<std::size_t>(m + 1)] = t.get(m, 1);
    compare_bivariate(r, lhs, dual_difference(LaurentSeries(-1, std::move(base)), P, Q), P, Q);
    r.finalize();
    return r;
}

Report condition_b_check(const CoefficientGrid& t, const CoefficientGrid& t0, const PsiCharacter& psi,
                         const ReplicateFamily& family_t, std::int64_t bound)
{
    if (bound < 1) throw DomainError("condition-b check needs bound >= 1");
    Report r;
    r.check_id = "product2b";
    r.level = psi.level();
    r.param("function", t.function());
    r.param("companion", t0.function());
    r.param("psi", psi.rule() == PsiCharacter::Rule::trivial ? "trivial" : "level");
    r.param("bound", bound);
    const auto src = FaberSource::super(t, t0, psi);
    for (std::int64_t m = 1; m <= bound; ++m)
        for (std::int64_t n = 1; m * n <= bound; ++n) {
            Rational sum = 0;
            for (auto s : divisors(gcd(m, n))) sum += family_t.get(s, m * n / (s * s)) / s;
            r.compare({{"m", m}, {"n", n}}, src.value(m, n), sum);
        }
    for (std::int64_t s = 1; s <= family_t.s_max(); ++s)
        if (!family_t.integral(s)) r.notes.push_back("F^(" + std::to_string(s) + ") has non-integer coefficients");
    r.finalize();
    return r;
}

} // namespace qrep
