#include "qrep/bivariate_series.hpp"

#include "qrep/errors.hpp"

#include <algorithm>
#include <utility>

namespace qrep {

BivariateSeries::BivariateSeries(std::int64_t p_valuation, std::vector<LaurentSeries> rows)
    : p_valuation_(p_valuation)
{
    if (rows.empty()) throw PrecisionError("insufficient precision: bivariate series with no p rows");
    q_low_ = rows.front().valuation();
    q_high_ = rows.front().order();
    for (const auto& r : rows) {
        q_low_ = std::min(q_low_, r.valuation());
        q_high_ = std::min(q_high_, r.order());
    }
    if (q_high_ <= q_low_)
        throw PrecisionError("insufficient precision: empty q window [" + std::to_string(q_low_) + ", " + std::to_string(q_high_) + ")");
    rows_.reserve(rows.size());
    for (auto& r : rows) rows_.push_back(r.reframed(q_low_, q_high_));
}

namespace {

// Rows share one stored window, but products must see each row's true
// valuation or their truncation order drops needlessly.
LaurentSeries compact(const LaurentSeries& r)
{
    if (r.is_zero()) return r.reframed(r.order() - 1, r.order());
    return r.trimmed();
}

} // namespace

LaurentSeries BivariateSeries::row(std::int64_t i) const
{
    if (i >= p_order())
        throw PrecisionError("p^" + std::to_string(i) + " row requested but the series is only known below p^" + std::to_string(p_order()));
    if (i < p_valuation_) return LaurentSeries::zero(q_high_ - 1, q_high_);
    return compact(rows_[static_cast<std::size_t>(i - p_valuation_)]);
}

Rational BivariateSeries::coefficient(std::int64_t p_exp, std::int64_t q_exp) const
{
    if (p_exp >= p_order())
        throw PrecisionError("coefficient at p^" + std::to_string(p_exp) + " beyond p order " + std::to_string(p_order()));
    if (p_exp < p_valuation_) {
        if (q_exp >= q_high_) throw PrecisionError("coefficient at q^" + std::to_string(q_exp) + " beyond q window");
        return 0;
    }
    return rows_[static_cast<std::size_t>(p_exp - p_valuation_)][q_exp];
}

BivariateSeries BivariateSeries::shifted_p(std::int64_t k) const { return BivariateSeries(p_valuation_ + k, rows_); }

BivariateSeries BivariateSeries::truncated(std::int64_t p_order_new, std::int64_t q_high_new) const
{
    if (p_order_new > p_order() || q_high_new > q_high_)
        throw PrecisionError("cannot truncate a bivariate series beyond its known window");
    if (p_order_new <= p_valuation_) throw PrecisionError("insufficient precision: empty p window");
    std::vector<LaurentSeries> rows;
    for (auto i = p_valuation_; i < p_order_new; ++i) rows.push_back(rows_[static_cast<std::size_t>(i - p_valuation_)].truncated(q_high_new));
    return BivariateSeries(p_valuation_, std::move(rows));
}

bool operator==(const BivariateSeries& a, const BivariateSeries& b)
{
    return a.p_valuation_ == b.p_valuation_ && a.rows_ == b.rows_;
}

BivariateSeries operator+(const BivariateSeries& f, const BivariateSeries& g)
{
    const auto lo = std::min(f.p_valuation(), g.p_valuation());
    const auto hi = std::min(f.p_order(), g.p_order());
    if (hi <= lo) throw PrecisionError("insufficient precision: add leaves an empty p window");
    std::vector<LaurentSeries> rows;
    for (auto i = lo; i < hi; ++i) rows.push_back(f.row(i) + g.row(i));
    return BivariateSeries(lo, std::move(rows));
}

BivariateSeries operator-(const BivariateSeries& f)
{
    std::vector<LaurentSeries> rows;
    for (auto i = f.p_valuation(); i < f.p_order(); ++i) rows.push_back(-f.row(i));
    return BivariateSeries(f.p_valuation(), std::move(rows));
}

BivariateSeries operator-(const BivariateSeries& f, const BivariateSeries& g) { return f + (-g); }

BivariateSeries operator*(const Rational& c, const BivariateSeries& f)
{
    std::vector<LaurentSeries> rows;
    for (auto i = f.p_valuation(); i < f.p_order(); ++i) rows.push_back(c * f.row(i));
    return BivariateSeries(f.p_valuation(), std::move(rows));
}

BivariateSeries operator*(const BivariateSeries& f, const BivariateSeries& g)
{
    const auto lo = f.p_valuation() + g.p_valuation();
    const auto hi = std::min(f.p_order() + g.p_valuation(), g.p_order() + f.p_valuation());
    if (hi <= lo) throw PrecisionError("insufficient precision: mul leaves an empty p window");
    std::vector<LaurentSeries> rows;
    for (auto n = lo; n < hi; ++n) {
        LaurentSeries acc = f.row(f.p_valuation()) * g.row(n - f.p_valuation());
        for (auto a = f.p_valuation() + 1; n - a >= g.p_valuation(); ++a) acc = acc + f.row(a) * g.row(n - a);
        rows.push_back(std::move(acc));
    }
    return BivariateSeries(lo, std::move(rows));
}

BivariateSeries exp(const BivariateSeries& f)
{
    for (auto i = f.p_valuation(); i <= 0 && i < f.p_order(); ++i)
        if (!f.row(i).is_zero()) throw DomainError("exp of bivariate series with a nonzero p^" + std::to_string(i) + " row");
    const auto P = f.p_order();
    if (P < 1) throw PrecisionError("insufficient precision: exp needs the p^0 row");
    // n E_n = sum_{k=1..n} k f_k E_{n-k}
    std::vector<LaurentSeries> e;
    // E_0 = 1 is exact; its order only needs to outlast every row it multiplies.
    e.push_back(LaurentSeries::constant(1, f.q_high() - std::min<std::int64_t>(0, f.q_low())));
    for (std::int64_t n = 1; n < P; ++n) {
        LaurentSeries acc = f.row(1) * e[static_cast<std::size_t>(n - 1)];
        for (std::int64_t k = 2; k <= n; ++k) acc = acc + Rational(k) * (f.row(k) * e[static_cast<std::size_t>(n - k)]);
        e.push_back(compact(ratio(1, n) * acc));
    }
    return BivariateSeries(0, std::move(e));
}

BivariateSeries log(const BivariateSeries& f)
{
    if (f.p_valuation() < 0)
        for (auto i = f.p_valuation(); i < 0; ++i)
            if (!f.row(i).is_zero()) throw DomainError("log of bivariate series with a nonzero p^" + std::to_string(i) + " row");
    const auto P = f.p_order();
    if (P < 1) throw PrecisionError("insufficient precision: log needs the p^0 row");
    const auto r0 = f.row(0);
    for (auto e = r0.valuation(); e < r0.order(); ++e)
        if (r0[e] != (e == 0 ? 1 : 0)) throw DomainError("log requires the p^0 row to be the constant 1");
    // L_n = f_n - (1/n) sum_{k=1..n-1} k L_k f_{n-k}
    std::vector<LaurentSeries> l;
    l.push_back(LaurentSeries::zero(f.q_high() - 1, f.q_high()));
    for (std::int64_t n = 1; n < P; ++n) {
        LaurentSeries acc = f.row(n);
        for (std::int64_t k = 1; k < n; ++k)
            acc = acc - ratio(k, n) * (l[static_cast<std::size_t>(k)] * f.row(n - k));
        l.push_back(compact(acc));
    }
    return BivariateSeries(0, std::move(l));
}

} // namespace qrep
