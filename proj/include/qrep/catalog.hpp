#pragma once

#include "qrep/laurent_series.hpp"
#include "qrep/product_formula.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace qrep {

enum class Group { gamma0, gamma1, full };

std::string to_string(Group g);

/// Functions computed in code rather than from a product recipe.
enum class Builtin { big_j };

struct CatalogEntry {
    std::string name;
    std::int64_t level = 1;
    Group group = Group::full;
    std::variant<ProductFormulaSpec, Builtin> source;
};

/// Parses the catalog configuration text. Layout:
///
///   [function.t0_5]
///   kind = "eta_quotient"   level = 5   group = "gamma0"
///   terms = [[1,6],[5,-6]]
///
/// Keys: kind (eta_quotient | residue_product | builtin), level, group
/// (gamma0 | gamma1 | full), terms, modulus, exponents ({class: e, ...}),
/// leading_power (integer, or "n/d" as a string), builtin ("big_j").
/// Unknown keys, duplicate keys and duplicate functions are ConfigErrors.
std::vector<CatalogEntry> parse_catalog(std::string_view text);

/// Named q-expansions with an expansion cache.
///
/// The entry table is fixed at construction. Expansions are cached per name;
/// a longer expansion replaces a shorter one and serves every request it
/// covers. Safe to use from several threads.
class Catalog {
public:
    explicit Catalog(std::vector<CatalogEntry> entries);
    static Catalog load(const std::filesystem::path& path);

    bool contains(const std::string& name) const;
    const CatalogEntry& entry(const std::string& name) const;
    std::vector<std::string> names() const;

    /// Normalized expansion q^-1 + 0 + a_1 q + ... through q^order.
    /// Throws DomainError for an unknown name, a failed normalization or a
    /// non-integer coefficient.
    LaurentSeries expand(const std::string& name, std::int64_t order) const;

private:
    LaurentSeries compute(const CatalogEntry& e, std::int64_t order) const;

    std::map<std::string, CatalogEntry> entries_;
    mutable std::mutex mutex_;
    mutable std::map<std::string, LaurentSeries> cache_;
};

/// Conventional catalog names for the level-N Hauptmoduls.
std::string hauptmodul_name(std::int64_t level);      // t1_N
std::string hauptmodul_name_gamma0(std::int64_t level); // t0_N

} // namespace qrep
