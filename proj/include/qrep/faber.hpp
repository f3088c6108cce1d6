#pragma once

#include "qrep/laurent_series.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace qrep {

/// X_n(t) = sum_k basis[k] t^k, with expansion (1/n) q^-n + 0 + sum_{m>=1} H_{m,n} q^m.
struct FaberPolynomial {
    std::int64_t n = 0;
    std::vector<Rational> basis;
    LaurentSeries expansion;
};

/// Single Faber polynomial of a normalized series. The expansion is known as
/// far as t allows: order(t) - n + 1.
FaberPolynomial faber(const LaurentSeries& t, std::int64_t n);

/// X_1 .. X_{n_max}, each expanded through q^{m_max}. Needs t known through
/// q^{m_max + n_max - 1}. Columns are computed concurrently.
std::vector<FaberPolynomial> faber_family(const LaurentSeries& t, std::int64_t n_max, std::int64_t m_max);

enum class Convention {
    series, // true Laurent coefficient: 1/n at m = -n
    remark  // replicate bookkeeping: 1 at m = -n
};

/// Coefficients of q^m in X_n(t) for 1 <= m <= m_max, 1 <= n <= n_max.
class CoefficientGrid {
public:
    CoefficientGrid(std::string function, std::int64_t m_max, std::int64_t n_max, std::vector<Rational> values);

    const std::string& function() const { return function_; }
    std::int64_t m_max() const { return m_max_; }
    std::int64_t n_max() const { return n_max_; }

    /// Stored value for m >= 1, convention-dependent for m <= 0.
    /// Throws PrecisionError outside the stored range.
    Rational get(std::int64_t m, std::int64_t n, Convention c = Convention::series) const;

    bool covers(std::int64_t m_max, std::int64_t n_max) const { return m_max <= m_max_ && n_max <= n_max_; }

    friend bool operator==(const CoefficientGrid&, const CoefficientGrid&) = default;

private:
    std::string function_;
    std::int64_t m_max_;
    std::int64_t n_max_;
    std::vector<Rational> values_; // row-major in m
};

inline Rational grid_get(const CoefficientGrid& g, std::int64_t m, std::int64_t n, Convention c)
{
    return g.get(m, n, c);
}

/// Grid of a normalized series t; t must be known through q^{m_max + n_max - 1}.
CoefficientGrid build_grid(const std::string& function, const LaurentSeries& t, std::int64_t m_max, std::int64_t n_max);

/// Versioned JSON with every value as a decimal string.
std::string serialize_grid(const CoefficientGrid& g);
CoefficientGrid parse_grid(const std::string& text);

void save_grid(const CoefficientGrid& g, const std::filesystem::path& path);
CoefficientGrid load_grid(const std::filesystem::path& path);

} // namespace qrep
