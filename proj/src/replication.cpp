#include "qrep/replication.hpp"

#include "qrep/errors.hpp"
#include "qrep/number_theory.hpp"

#include <cmath>
#include <string>

namespace qrep {

FaberSource FaberSource::super(const CoefficientGrid& t, const CoefficientGrid& t0, PsiCharacter psi)
{
    return FaberSource(&t, &t0, psi);
}

FaberSource FaberSource::plain(const CoefficientGrid& g) { return FaberSource(nullptr, &g, std::nullopt); }

Rational FaberSource::value(std::int64_t m, std::int64_t n) const
{
    if (m < 1 || n < 1) throw DomainError("F_{m,n} is only stored for m, n >= 1");
    if (!psi_) return t0_->get(m, n);
    const Rational f = 2 * t_->get(m, n) - t0_->get(m, n);
    return psi_->pair(m, n) * f;
}

bool FaberSource::covers(std::int64_t m, std::int64_t n) const
{
    return t0_->covers(m, n) && (t_ == nullptr || t_->covers(m, n));
}

Rational ReplicateFamily::get(std::int64_t s, std::int64_t k) const
{
    if (k <= 0) return k == -1 ? 1 : 0;
    const auto it = values_.find(s);
    if (it == values_.end() || k > static_cast<std::int64_t>(it->second.size()))
        throw PrecisionError("replicate F^(" + std::to_string(s) + ")_" + std::to_string(k) + " was not extracted");
    return it->second[static_cast<std::size_t>(k - 1)];
}

bool ReplicateFamily::covers(std::int64_t s, std::int64_t k) const { return k <= 0 || k <= k_max(s); }

std::int64_t ReplicateFamily::k_max(std::int64_t s) const
{
    const auto it = values_.find(s);
    return it == values_.end() ? 0 : static_cast<std::int64_t>(it->second.size());
}

bool ReplicateFamily::integral(std::int64_t s) const
{
    const auto it = values_.find(s);
    if (it == values_.end()) return true;
    for (const auto& x : it->second)
        if (!is_integer(x)) return false;
    return true;
}

void ReplicateFamily::fill(const FaberSource& src, std::int64_t s, std::int64_t k_max)
{
    std::vector<Rational> v(static_cast<std::size_t>(k_max));
    const auto ds = divisors(s);
    for (std::int64_t k = 1; k <= k_max; ++k) {
        Rational acc = 0;
        for (auto d : ds) {
            const int mu = mobius(d);
            if (mu != 0) acc += mu * src.value(s / d, s * d * k);
        }
        v[static_cast<std::size_t>(k - 1)] = s * acc;
    }
    values_[s] = std::move(v);
}

ReplicateFamily extract_replicates(const FaberSource& src, std::int64_t s_max, std::int64_t k_max)
{
    if (s_max < 1 || k_max < 1) throw DomainError("extract_replicates needs s_max, k_max >= 1");
    ReplicateFamily f;
    for (std::int64_t s = 1; s <= s_max; ++s) f.fill(src, s, k_max);
    return f;
}

ReplicateFamily extract_replicates_bounded(const FaberSource& src, std::int64_t bound)
{
    if (bound < 1) throw DomainError("extract_replicates needs bound >= 1");
    ReplicateFamily f;
    for (std::int64_t s = 1; s * s <= bound; ++s) f.fill(src, s, bound / (s * s));
    return f;
}

namespace {

void require_square(const CoefficientGrid& g, std::int64_t bound)
{
    if (!g.covers(bound, bound))
        throw PrecisionError("grid " + g.function() + " is " + std::to_string(g.m_max()) + "x" + std::to_string(g.n_max()) +
                             ", the check needs " + std::to_string(bound) + "x" + std::to_string(bound));
}

// All (a, b) with ab <= bound grouped by (ab, gcd(a, b)); each pair is
// compared with the first member of its group.
template <class Value>
void quadruples(Report& r, std::int64_t bound, Value value)
{
    for (std::int64_t prod = 1; prod <= bound; ++prod) {
        std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> first;
        for (auto a : divisors(prod)) {
            const auto b = prod / a;
            const auto g = gcd(a, b);
            const auto it = first.find(g);
            if (it == first.end()) {
                first.emplace(g, std::make_pair(a, b));
                continue;
            }
            const auto [c, d] = it->second;
            r.compare({{"a", a}, {"b", b}, {"c", c}, {"d", d}}, value(a, b), value(c, d));
        }
    }
}

} // namespace

Report replicable_check(const CoefficientGrid& g, std::int64_t bound)
{
    require_square(g, bound);
    Report r;
    r.check_id = "replicable";
    r.param("function", g.function());
    r.param("bound", bound);
    quadruples(r, bound, [&](std::int64_t a, std::int64_t b) { return g.get(a, b); });
    r.finalize();
    return r;
}

Report super_check(const CoefficientGrid& t, const CoefficientGrid& t0, const PsiCharacter& psi, std::int64_t bound)
{
    require_square(t, bound);
    require_square(t0, bound);
    Report r;
    r.check_id = "super";
    r.level = psi.level();
    r.param("function", t.function());
    r.param("companion", t0.function());
    r.param("psi", psi.rule() == PsiCharacter::Rule::trivial ? "trivial" : "level");
    r.param("bound", bound);
    const auto src = FaberSource::super(t, t0, psi);
    quadruples(r, bound, [&](std::int64_t a, std::int64_t b) { return src.value(a, b); });
    r.finalize();
    return r;
}

bool lemma_aa_applies(std::int64_t level, std::int64_t p)
{
    return (level == 5 && p == 5) || (level == 8 && p == 2) || (level == 10 && p == 5) || (level == 12 && (p == 2 || p == 3));
}

namespace {

// 2 X_n(t) - X_n(t0) for n = 1..n_max, each through q^order.
std::vector<LaurentSeries> combined_faber(const Catalog& c, const std::string& t_name, const std::string& t0_name, std::int64_t n_max,
                                          std::int64_t order)
{
    const auto t = c.expand(t_name, order + n_max);
    const auto t0 = c.expand(t0_name, order + n_max);
    const auto ft = faber_family(t, n_max, order);
    const auto ft0 = faber_family(t0, n_max, order);
    std::vector<LaurentSeries> out;
    for (std::int64_t n = 0; n < n_max; ++n)
        out.push_back(Rational(2) * ft[static_cast<std::size_t>(n)].expansion - ft0[static_cast<std::size_t>(n)].expansion);
    return out;
}

void compare_series(Report& r, std::int64_t n, const LaurentSeries& lhs, const LaurentSeries& rhs, std::int64_t order)
{
    if (lhs.order() <= order || rhs.order() <= order) throw InternalError("series identity compared past its known window");
    for (auto e = std::min(lhs.valuation(), rhs.valuation()); e <= order; ++e) r.compare({{"n", n}, {"q_exp", e}}, lhs[e], rhs[e]);
}

} // namespace

Report lemma_aa_check(const Catalog& c, std::int64_t level, std::int64_t p, std::int64_t n_max, std::int64_t order)
{
    if (!lemma_aa_applies(level, p))
        throw DomainError("the U_p identity is not claimed for level " + std::to_string(level) + " and p = " + std::to_string(p) +
                          "; valid pairs are (5,5), (8,2), (10,5), (12,2), (12,3)");
    if (n_max < 1 || order < 0) throw DomainError("lemma-aa needs n_max >= 1 and order >= 0");
    Report r;
    r.check_id = "lemma-aa";
    r.level = level;
    r.param("p", p);
    r.param("n_max", n_max);
    r.param("order", order);
    const auto big = combined_faber(c, hauptmodul_name(level), hauptmodul_name_gamma0(level), p * n_max, p * order + p - 1);
    const auto small = combined_faber(c, hauptmodul_name(level), hauptmodul_name_gamma0(level), n_max, order);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const auto lhs = hecke_u(big[static_cast<std::size_t>(p * n - 1)], p);
        const auto rhs = ratio(1, p) * small[static_cast<std::size_t>(n - 1)];
        compare_series(r, n, lhs, rhs, order);
    }
    r.finalize();
    return r;
}

Report lemma_ii_check(const Catalog& c, std::int64_t n_max, std::int64_t order)
{
    if (n_max < 1 || order < 0) throw DomainError("lemma-ii needs n_max >= 1 and order >= 0");
    Report r;
    r.check_id = "lemma-ii";
    r.level = 10;
    r.param("n_max", n_max);
    r.param("order", order);
    const auto big = combined_faber(c, "t1_10", "t0_10", 2 * n_max, 2 * order + 1);
    const auto ten = combined_faber(c, "t1_10", "t0_10", n_max, order);
    const auto five = combined_faber(c, "t1_5_as_t2_of_10", "t0_5_as_t2_of_10", n_max, order);
    const Rational quarter(1, 4);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const auto i = static_cast<std::size_t>(n - 1);
        const auto lhs = hecke_u(big[static_cast<std::size_t>(2 * n - 1)], 2);
        const auto rhs = quarter * five[i] + quarter * ten[i];
        compare_series(r, n, lhs, rhs, order);
    }
    r.finalize();
    return r;
}

Report lemma_ff_check(GridStore& store, std::int64_t m_max, std::int64_t r_max, std::int64_t k_max)
{
    if (m_max < 1 || r_max < 1 || k_max < 1) throw DomainError("lemma-ff needs positive bounds");
    Report r;
    r.check_id = "lemma-ff";
    r.level = 12;
    r.param("m_max", m_max);
    r.param("r_max", r_max);
    r.param("k_max", k_max);
    const std::int64_t top = std::int64_t{1} << k_max;
    const auto rows = store.get("t1_12", top * m_max, r_max);  // H_{2^k m, r}
    const auto cols = store.get("t1_12", m_max, top * r_max);  // H_{m, 2^k r}
    for (std::int64_t m = 1; m <= m_max; m += 2)
        for (std::int64_t rr = 1; rr <= r_max; rr += 2)
            for (std::int64_t k = 1; k <= k_max; ++k) {
                const std::int64_t two_k = std::int64_t{1} << k;
                const int eps = positive_mod(rr, 4) == 3 ? 1 : -1;
                const int sign = (k % 2 == 0 ? 1 : -1) * eps;
                r.compare({{"m", m}, {"r", rr}, {"k", k}}, chi_minus4(m) * rows->get(two_k * m, rr),
                          sign * cols->get(m, two_k * rr));
            }
    r.finalize();
    return r;
}

Report lemma_jj_check(GridStore& store, std::int64_t r_max, std::int64_t k_max, std::int64_t m_max)
{
    if (m_max < 1 || r_max < 1 || k_max < 1) throw DomainError("lemma-jj needs positive bounds");
    Report r;
    r.check_id = "lemma-jj";
    r.level = 10;
    r.param("r_max", r_max);
    r.param("k_max", k_max);
    r.param("m_max", m_max);
    const std::int64_t top = std::int64_t{1} << k_max;
    const auto rows_t = store.get("t1_10", top * m_max, r_max);
    const auto rows_t0 = store.get("t0_10", top * m_max, r_max);
    const auto cols_t = store.get("t1_10", m_max, top * r_max);
    const auto cols_t0 = store.get("t0_10", m_max, top * r_max);
    for (std::int64_t m = 1; m <= m_max; m += 2)
        for (std::int64_t rr = 1; rr <= r_max; rr += 2)
            for (std::int64_t k = 1; k <= k_max; ++k) {
                const std::int64_t two_k = std::int64_t{1} << k;
                const Rational lhs = 2 * rows_t->get(two_k * m, rr) - rows_t0->get(two_k * m, rr);
                const Rational rhs = (k % 2 == 0 ? 1 : -1) * (2 * cols_t->get(m, two_k * rr) - cols_t0->get(m, two_k * rr));
                r.compare({{"m", m}, {"r", rr}, {"k", k}}, lhs, rhs);
            }
    r.finalize();
    return r;
}

Report koike_vanishing_check(GridStore& store, std::int64_t r_max, std::int64_t k_max, std::int64_t m_max)
{
    if (m_max < 1 || r_max < 1 || k_max < 1) throw DomainError("koike-vanishing needs positive bounds");
    Report r;
    r.check_id = "koike-vanishing";
    r.level = 12;
    r.param("r_max", r_max);
    r.param("k_max", k_max);
    r.param("m_max", m_max);
    const std::int64_t top = std::int64_t{1} << k_max;
    const auto g = store.get("t0_12", top * m_max, r_max);
    for (std::int64_t m = 1; m <= m_max; ++m)
        for (std::int64_t rr = 1; rr <= r_max; rr += 2)
            for (std::int64_t k = 1; k <= k_max; ++k)
                r.compare({{"m", m}, {"r", rr}, {"k", k}}, g->get((std::int64_t{1} << k) * m, rr), 0);
    r.finalize();
    return r;
}

} // namespace qrep
