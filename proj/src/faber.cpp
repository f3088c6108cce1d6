#include "qrep/faber.hpp"

#include "qrep/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>
#include <thread>

namespace qrep {

namespace {

void require_normalized(const LaurentSeries& t)
{
    if (t.order() < 1 || t.leading_exponent() != -1 || t[-1] != 1 || t[0] != 0)
        throw DomainError("Faber polynomials need a normalized series q^-1 + 0 + ...");
}

// t^0 .. t^k_max, each with its natural truncation.
std::vector<LaurentSeries> powers(const LaurentSeries& t, std::int64_t k_max, std::int64_t keep_order)
{
    std::vector<LaurentSeries> pw;
    pw.reserve(static_cast<std::size_t>(k_max + 1));
    pw.push_back(LaurentSeries::constant(1, t.order() + 1));
    for (std::int64_t k = 1; k <= k_max; ++k)
        pw.push_back(multiply_truncated(pw.back(), t, keep_order + (k_max - k)));
    return pw;
}

// Triangular elimination: start from t^n, cancel exponents -(n-1)..0 using
// lower powers. Everything happens on the window [-n, hi), where hi is the
// smallest order among the powers used, capped at max_order.
FaberPolynomial eliminate(const std::vector<LaurentSeries>& pw, std::int64_t n, std::int64_t max_order)
{
    std::int64_t hi = max_order;
    for (std::int64_t k = 0; k <= n; ++k) hi = std::min(hi, pw[static_cast<std::size_t>(k)].order());
    if (hi <= 0) throw PrecisionError("insufficient precision: X_" + std::to_string(n) + " needs t further out");
    const auto lo = -n;
    const auto len = static_cast<std::size_t>(hi - lo);

    // acc holds n X_n restricted to the window; b[k] are the coefficients of
    // t^k in n X_n.
    std::vector<Rational> acc(len);
    const auto& tn = pw[static_cast<std::size_t>(n)];
    for (auto e = lo; e < hi; ++e) acc[static_cast<std::size_t>(e - lo)] = tn[e];
    std::vector<Rational> b(static_cast<std::size_t>(n + 1));
    b[static_cast<std::size_t>(n)] = 1;
    Rational term;
    for (auto e = -(n - 1); e <= 0; ++e) {
        const Rational c = acc[static_cast<std::size_t>(e - lo)];
        if (sgn(c) == 0) continue;
        const auto k = -e;
        const auto& tk = pw[static_cast<std::size_t>(k)];
        b[static_cast<std::size_t>(k)] -= c;
        for (auto x = e; x < hi; ++x) {
            const auto& v = tk[x];
            if (sgn(v) == 0) continue;
            mpq_mul(term.get_mpq_t(), c.get_mpq_t(), v.get_mpq_t());
            acc[static_cast<std::size_t>(x - lo)] -= term;
        }
    }
    const Rational inv_n = ratio(1, n);
    for (auto e = -(n - 1); e <= 0; ++e)
        if (sgn(acc[static_cast<std::size_t>(e - lo)]) != 0) throw InternalError("Faber elimination left a polar term");
    for (auto& x : acc) x *= inv_n;
    for (auto& x : b) x *= inv_n;
    return FaberPolynomial{n, std::move(b), LaurentSeries(lo, std::move(acc))};
}

} // namespace

FaberPolynomial faber(const LaurentSeries& t, std::int64_t n)
{
    if (n < 1) throw DomainError("Faber polynomial index must be >= 1, got " + std::to_string(n));
    require_normalized(t);
    const auto pw = powers(t, n, t.order() + n);
    return eliminate(pw, n, t.order() - n + 1);
}

std::vector<FaberPolynomial> faber_family(const LaurentSeries& t, std::int64_t n_max, std::int64_t m_max)
{
    if (n_max < 1 || m_max < 0) throw DomainError("faber_family needs n_max >= 1 and m_max >= 0");
    require_normalized(t);
    // X_n through q^{m_max} needs t^k through q^{m_max + n - k}; t^k is
    // known to order(t) - k + 1.
    if (t.order() < m_max + n_max)
        throw PrecisionError("insufficient precision: X_1..X_" + std::to_string(n_max) + " through q^" + std::to_string(m_max) +
                             " need t through q^" + std::to_string(m_max + n_max - 1) + ", have order " + std::to_string(t.order()));
    const auto pw = powers(t, n_max, m_max + 1);

    std::vector<std::optional<FaberPolynomial>> cols(static_cast<std::size_t>(n_max));
    const auto workers = std::max<std::int64_t>(1, std::min<std::int64_t>(n_max, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> jobs;
    for (std::int64_t w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            // Strided so every worker gets a mix of cheap and expensive columns.
            for (auto n = n_max - w; n >= 1; n -= workers)
                cols[static_cast<std::size_t>(n - 1)] = eliminate(pw, n, m_max + 1);
        }));
    }
    for (auto& j : jobs) j.get();
    std::vector<FaberPolynomial> out;
    out.reserve(cols.size());
    for (auto& c : cols) out.push_back(std::move(*c));
    return out;
}

CoefficientGrid::CoefficientGrid(std::string function, std::int64_t m_max, std::int64_t n_max, std::vector<Rational> values)
    : function_(std::move(function)), m_max_(m_max), n_max_(n_max), values_(std::move(values))
{
    if (m_max_ < 1 || n_max_ < 1) throw DomainError("grid bounds must be positive");
    if (values_.size() != static_cast<std::size_t>(m_max_ * n_max_)) throw DomainError("grid value count does not match its bounds");
}

Rational CoefficientGrid::get(std::int64_t m, std::int64_t n, Convention c) const
{
    if (n < 1 || n > n_max_)
        throw PrecisionError("grid " + function_ + " has n in [1, " + std::to_string(n_max_) + "], asked for n = " + std::to_string(n));
    if (m == 0) return 0;
    if (m < 0) {
        if (m != -n) return 0;
        return c == Convention::remark ? Rational(1) : ratio(1, n);
    }
    if (m > m_max_)
        throw PrecisionError("grid " + function_ + " has m in [1, " + std::to_string(m_max_) + "], asked for m = " + std::to_string(m));
    return values_[static_cast<std::size_t>((m - 1) * n_max_ + (n - 1))];
}

CoefficientGrid build_grid(const std::string& function, const LaurentSeries& t, std::int64_t m_max, std::int64_t n_max)
{
    if (m_max < 1 || n_max < 1) throw DomainError("grid bounds must be positive");
    const auto fam = faber_family(t, n_max, m_max);
    std::vector<Rational> v(static_cast<std::size_t>(m_max * n_max));
    for (std::int64_t m = 1; m <= m_max; ++m)
        for (std::int64_t n = 1; n <= n_max; ++n)
            v[static_cast<std::size_t>((m - 1) * n_max + (n - 1))] = fam[static_cast<std::size_t>(n - 1)].expansion[m];
    return CoefficientGrid(function, m_max, n_max, std::move(v));
}

namespace {
constexpr const char* grid_format = "qrep-coefficient-grid";
constexpr int grid_version = 1;
} // namespace

std::string serialize_grid(const CoefficientGrid& g)
{
    nlohmann::ordered_json j;
    j["format"] = grid_format;
    j["version"] = grid_version;
    j["function"] = g.function();
    j["m_max"] = g.m_max();
    j["n_max"] = g.n_max();
    auto rows = nlohmann::ordered_json::array();
    for (std::int64_t m = 1; m <= g.m_max(); ++m) {
        auto row = nlohmann::ordered_json::array();
        for (std::int64_t n = 1; n <= g.n_max(); ++n) row.push_back(to_string(g.get(m, n)));
        rows.push_back(std::move(row));
    }
    j["values"] = std::move(rows);
    return j.dump(1) + "\n";
}

CoefficientGrid parse_grid(const std::string& text)
{
    try {
        const auto j = nlohmann::json::parse(text);
        if (j.at("format") != grid_format) throw DomainError("not a coefficient grid file");
        if (j.at("version") != grid_version) throw DomainError("unsupported grid file version " + j.at("version").dump());
        const auto m_max = j.at("m_max").get<std::int64_t>();
        const auto n_max = j.at("n_max").get<std::int64_t>();
        const auto& rows = j.at("values");
        if (!rows.is_array() || static_cast<std::int64_t>(rows.size()) != m_max) throw DomainError("grid file has the wrong number of rows");
        std::vector<Rational> v;
        v.reserve(static_cast<std::size_t>(m_max * n_max));
        for (const auto& row : rows) {
            if (!row.is_array() || static_cast<std::int64_t>(row.size()) != n_max) throw DomainError("grid file row has the wrong length");
            for (const auto& x : row) v.push_back(parse_rational(x.get<std::string>()));
        }
        return CoefficientGrid(j.at("function").get<std::string>(), m_max, n_max, std::move(v));
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed grid file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw DomainError(std::string("malformed grid file: ") + e.what());
    }
}

void save_grid(const CoefficientGrid& g, const std::filesystem::path& path)
{
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << serialize_grid(g);
        if (!out) throw std::runtime_error("write failed for " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

CoefficientGrid load_grid(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_grid(buf.str());
}

} // namespace qrep
