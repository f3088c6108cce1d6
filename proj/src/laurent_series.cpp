#include "qrep/laurent_series.hpp"

#include "qrep/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qrep {

namespace {

// Floor division for possibly negative numerators.
std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::int64_t positive_mod(std::int64_t a, std::int64_t m)
{
    const auto r = a % m;
    return r < 0 ? r + m : r;
}

void require_window(std::int64_t valuation, std::int64_t order, const char* op)
{
    if (order <= valuation)
        throw PrecisionError(std::string("insufficient precision: ") + op + " leaves an empty truncation window [" +
                             std::to_string(valuation) + ", " + std::to_string(order) + ")");
}

bool all_integral(std::span<const Rational> c)
{
    return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.get_den() == 1; });
}

// Coefficients of the product for exponents [val, order), where f and g are
// dense from their valuations.
std::vector<Rational> convolve(const LaurentSeries& f, const LaurentSeries& g, std::int64_t val, std::int64_t order)
{
    const auto fc = f.coefficients();
    const auto gc = g.coefficients();
    const auto len = static_cast<std::size_t>(order - val);
    const std::int64_t base = f.valuation() + g.valuation();
    std::vector<Rational> out(len);

    if (all_integral(fc) && all_integral(gc)) {
        std::vector<Integer> acc(len);
        for (std::size_t i = 0; i < fc.size(); ++i) {
            const mpz_srcptr a = fc[i].get_num_mpz_t();
            if (mpz_sgn(a) == 0) continue;
            const std::int64_t start = base + static_cast<std::int64_t>(i) - val;
            if (start >= static_cast<std::int64_t>(len)) break;
            for (std::size_t j = 0; j < gc.size(); ++j) {
                const std::int64_t k = start + static_cast<std::int64_t>(j);
                if (k < 0) continue;
                if (k >= static_cast<std::int64_t>(len)) break;
                mpz_addmul(acc[static_cast<std::size_t>(k)].get_mpz_t(), a, gc[j].get_num_mpz_t());
            }
        }
        for (std::size_t k = 0; k < len; ++k) out[k] = Rational(acc[k]);
        return out;
    }

    Rational term;
    for (std::size_t i = 0; i < fc.size(); ++i) {
        if (sgn(fc[i]) == 0) continue;
        const std::int64_t start = base + static_cast<std::int64_t>(i) - val;
        if (start >= static_cast<std::int64_t>(len)) break;
        for (std::size_t j = 0; j < gc.size(); ++j) {
            const std::int64_t k = start + static_cast<std::int64_t>(j);
            if (k < 0) continue;
            if (k >= static_cast<std::int64_t>(len)) break;
            if (sgn(gc[j]) == 0) continue;
            mpq_mul(term.get_mpq_t(), fc[i].get_mpq_t(), gc[j].get_mpq_t());
            out[static_cast<std::size_t>(k)] += term;
        }
    }
    return out;
}

} // namespace

LaurentSeries::LaurentSeries(std::int64_t valuation, std::vector<Rational> coeffs)
    : valuation_(valuation), coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) throw PrecisionError("insufficient precision: series with empty truncation window");
}

LaurentSeries LaurentSeries::zero(std::int64_t valuation, std::int64_t order)
{
    require_window(valuation, order, "zero");
    return LaurentSeries(valuation, std::vector<Rational>(static_cast<std::size_t>(order - valuation)));
}

LaurentSeries LaurentSeries::constant(const Rational& c, std::int64_t order)
{
    return monomial(c, 0, order);
}

LaurentSeries LaurentSeries::monomial(const Rational& c, std::int64_t exponent, std::int64_t order)
{
    require_window(exponent, order, "monomial");
    std::vector<Rational> coeffs(static_cast<std::size_t>(order - exponent));
    coeffs[0] = c;
    return LaurentSeries(exponent, std::move(coeffs));
}

LaurentSeries LaurentSeries::from_integers(std::int64_t valuation, std::initializer_list<long> coeffs)
{
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long x : coeffs) c.emplace_back(x);
    return LaurentSeries(valuation, std::move(c));
}

Rational LaurentSeries::coefficient(std::int64_t exponent) const { return (*this)[exponent]; }

const Rational& LaurentSeries::operator[](std::int64_t exponent) const
{
    static const Rational zero_value(0);
    if (exponent >= order())
        throw PrecisionError("coefficient of q^" + std::to_string(exponent) + " requested but the series is only known below q^" +
                             std::to_string(order()));
    if (exponent < valuation_) return zero_value;
    return coeffs_[static_cast<std::size_t>(exponent - valuation_)];
}

std::int64_t LaurentSeries::leading_exponent() const
{
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) return valuation_ + static_cast<std::int64_t>(i);
    return order();
}

bool LaurentSeries::is_zero() const { return leading_exponent() == order(); }

bool LaurentSeries::is_integral() const { return all_integral(coeffs_); }

std::vector<Integer> LaurentSeries::integer_coefficients() const
{
    std::vector<Integer> out;
    out.reserve(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].get_den() != 1)
            throw DomainError("coefficient of q^" + std::to_string(valuation_ + static_cast<std::int64_t>(i)) +
                              " is not an integer: " + qrep::to_string(coeffs_[i]));
        out.push_back(coeffs_[i].get_num());
    }
    return out;
}

LaurentSeries LaurentSeries::trimmed() const
{
    const auto lead = leading_exponent();
    if (lead == order()) return *this;
    return reframed(lead, order());
}

LaurentSeries LaurentSeries::truncated(std::int64_t new_order) const
{
    if (new_order > order())
        throw PrecisionError("cannot extend a series known below q^" + std::to_string(order()) + " to q^" +
                             std::to_string(new_order));
    return reframed(std::min(valuation_, new_order - 1), new_order);
}

LaurentSeries LaurentSeries::reframed(std::int64_t new_valuation, std::int64_t new_order) const
{
    require_window(new_valuation, new_order, "reframe");
    if (new_order > order())
        throw PrecisionError("cannot reframe beyond the known order q^" + std::to_string(order()));
    const auto lead = leading_exponent();
    if (new_valuation > lead && lead < new_order)
        throw DomainError("reframe would drop the nonzero coefficient of q^" + std::to_string(lead));
    std::vector<Rational> c(static_cast<std::size_t>(new_order - new_valuation));
    for (std::int64_t e = std::max(new_valuation, valuation_); e < new_order; ++e)
        c[static_cast<std::size_t>(e - new_valuation)] = coeffs_[static_cast<std::size_t>(e - valuation_)];
    return LaurentSeries(new_valuation, std::move(c));
}

LaurentSeries LaurentSeries::shifted(std::int64_t k) const { return LaurentSeries(valuation_ + k, coeffs_); }

bool LaurentSeries::agrees_with(const LaurentSeries& other) const
{
    const auto lo = std::min(valuation_, other.valuation_);
    const auto hi = std::min(order(), other.order());
    for (auto e = lo; e < hi; ++e)
        if ((*this)[e] != other[e]) return false;
    return true;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b)
{
    return a.valuation_ == b.valuation_ && a.coeffs_ == b.coeffs_;
}

std::string LaurentSeries::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        const auto e = valuation_ + static_cast<std::int64_t>(i);
        if (!first) os << " + ";
        first = false;
        os << qrep::to_string(coeffs_[i]);
        if (e != 0) os << "*q^" << e;
    }
    if (!first) os << " + ";
    os << "O(q^" << order() << ")";
    return os.str();
}

LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g)
{
    const auto val = std::min(f.valuation(), g.valuation());
    const auto ord = std::min(f.order(), g.order());
    require_window(val, ord, "add");
    std::vector<Rational> c(static_cast<std::size_t>(ord - val));
    for (auto e = val; e < ord; ++e) c[static_cast<std::size_t>(e - val)] = f[e] + g[e];
    return LaurentSeries(val, std::move(c));
}

LaurentSeries operator-(const LaurentSeries& f)
{
    std::vector<Rational> c(f.coefficients().begin(), f.coefficients().end());
    for (auto& x : c) x = -x;
    return LaurentSeries(f.valuation(), std::move(c));
}

LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) { return f + (-g); }

LaurentSeries operator*(const Rational& c, const LaurentSeries& f)
{
    std::vector<Rational> out(f.coefficients().begin(), f.coefficients().end());
    for (auto& x : out) x *= c;
    return LaurentSeries(f.valuation(), std::move(out));
}

LaurentSeries multiply_truncated(const LaurentSeries& f, const LaurentSeries& g, std::int64_t max_order)
{
    const auto val = f.valuation() + g.valuation();
    const auto ord = std::min({f.order() + g.valuation(), g.order() + f.valuation(), max_order});
    require_window(val, ord, "mul");
    return LaurentSeries(val, convolve(f, g, val, ord));
}

LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g)
{
    const auto val = f.valuation() + g.valuation();
    const auto ord = std::min(f.order() + g.valuation(), g.order() + f.valuation());
    require_window(val, ord, "mul");
    return LaurentSeries(val, convolve(f, g, val, ord));
}

LaurentSeries invert(const LaurentSeries& f)
{
    const auto& a0 = f.coefficients().front();
    if (sgn(a0) == 0) throw DomainError("non-invertible leading term: coefficient of q^" + std::to_string(f.valuation()) + " is zero");
    const auto a = f.coefficients();
    const auto n = a.size();
    const Rational inv0 = 1 / a0;
    std::vector<Rational> b(n);
    b[0] = inv0;
    Rational acc, term;
    for (std::size_t k = 1; k < n; ++k) {
        acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (sgn(a[j]) == 0) continue;
            mpq_mul(term.get_mpq_t(), a[j].get_mpq_t(), b[k - j].get_mpq_t());
            acc += term;
        }
        b[k] = -acc * inv0;
    }
    return LaurentSeries(-f.valuation(), std::move(b));
}

LaurentSeries pow(const LaurentSeries& f, std::int64_t k)
{
    if (k < 0) return pow(invert(f), -k);
    if (k == 0) {
        // Exact 1, reported to the relative precision of f.
        const auto rel = f.order() - f.valuation();
        return LaurentSeries::constant(1, rel);
    }
    LaurentSeries base = f;
    LaurentSeries result = f;
    bool have = false;
    while (k > 0) {
        if (k & 1) {
            result = have ? result * base : base;
            have = true;
        }
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

LaurentSeries exp(const LaurentSeries& f)
{
    const auto ord = f.order();
    for (auto e = f.valuation(); e <= 0 && e < ord; ++e)
        if (sgn(f[e]) != 0) throw DomainError("exp of non-positive-valuation series (nonzero coefficient at q^" + std::to_string(e) + ")");
    if (ord < 1) throw PrecisionError("insufficient precision: exp needs the series known through q^0");
    // E' = f' E  =>  n e_n = sum_{k=1..n} k f_k e_{n-k}
    const auto n = static_cast<std::size_t>(ord);
    std::vector<Rational> e(n);
    e[0] = 1;
    Rational acc, term;
    for (std::size_t m = 1; m < n; ++m) {
        acc = 0;
        for (std::size_t k = 1; k <= m; ++k) {
            const auto& fk = f[static_cast<std::int64_t>(k)];
            if (sgn(fk) == 0) continue;
            mpq_mul(term.get_mpq_t(), fk.get_mpq_t(), e[m - k].get_mpq_t());
            acc += static_cast<long>(k) * term;
        }
        e[m] = acc / static_cast<long>(m);
    }
    return LaurentSeries(0, std::move(e));
}

LaurentSeries log(const LaurentSeries& f)
{
    const auto ord = f.order();
    for (auto e = f.valuation(); e < 0 && e < ord; ++e)
        if (sgn(f[e]) != 0) throw DomainError("log requires unit constant term (nonzero coefficient at q^" + std::to_string(e) + ")");
    if (ord < 1) throw PrecisionError("insufficient precision: log needs the constant term");
    if (f[0] != 1) throw DomainError("log requires unit constant term, got " + qrep::to_string(f[0]));
    // L' = f'/f  =>  n l_n = n f_n - sum_{k=1..n-1} k l_k f_{n-k}
    const auto n = static_cast<std::size_t>(ord);
    std::vector<Rational> l(n);
    Rational acc, term;
    for (std::size_t m = 1; m < n; ++m) {
        acc = static_cast<long>(m) * f[static_cast<std::int64_t>(m)];
        for (std::size_t k = 1; k < m; ++k) {
            const auto& fk = f[static_cast<std::int64_t>(m - k)];
            if (sgn(fk) == 0 || sgn(l[k]) == 0) continue;
            mpq_mul(term.get_mpq_t(), l[k].get_mpq_t(), fk.get_mpq_t());
            acc -= static_cast<long>(k) * term;
        }
        l[m] = acc / static_cast<long>(m);
    }
    return LaurentSeries(0, std::move(l));
}

LaurentSeries hecke_u(const LaurentSeries& f, std::int64_t n)
{
    if (n < 1) throw DomainError("U_n needs n >= 1, got " + std::to_string(n));
    const auto val = ceil_div(f.valuation(), n);
    const auto ord = ceil_div(f.order(), n);
    require_window(val, ord, "U_n");
    std::vector<Rational> c(static_cast<std::size_t>(ord - val));
    for (auto m = val; m < ord; ++m) c[static_cast<std::size_t>(m - val)] = f[n * m];
    return LaurentSeries(val, std::move(c));
}

LaurentSeries substitute_power(const LaurentSeries& f, std::int64_t k)
{
    if (k < 1) throw DomainError("substitute_power needs k >= 1, got " + std::to_string(k));
    const auto val = k * f.valuation();
    const auto ord = k * f.order();
    std::vector<Rational> c(static_cast<std::size_t>(ord - val));
    const auto src = f.coefficients();
    for (std::size_t i = 0; i < src.size(); ++i) c[i * static_cast<std::size_t>(k)] = src[i];
    return LaurentSeries(val, std::move(c));
}

LaurentSeries twist(const LaurentSeries& f, std::span<const Rational> table)
{
    if (table.empty()) throw DomainError("twist needs a nonempty periodic table");
    const auto period = static_cast<std::int64_t>(table.size());
    std::vector<Rational> c(f.coefficients().begin(), f.coefficients().end());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto e = f.valuation() + static_cast<std::int64_t>(i);
        c[i] *= table[static_cast<std::size_t>(positive_mod(e, period))];
    }
    return LaurentSeries(f.valuation(), std::move(c));
}

namespace twists {

std::vector<Rational> chi_minus4() { return {0, 1, 0, -1}; }
std::vector<Rational> chi0_mod2() { return {0, 1}; }
std::vector<Rational> sign() { return {1, -1}; }

} // namespace twists

} // namespace qrep
