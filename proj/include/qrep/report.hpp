#pragma once

#include "qrep/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qrep {

struct Violation {
    /// Named indices, e.g. {"a",2},{"b",3},... or {"p_exp",1},{"q_exp",-2}.
    std::vector<std::pair<std::string, std::int64_t>> indices;
    Rational lhs;
    Rational rhs;
};

/// Outcome of one check. Violations are kept in a deterministic order.
struct Report {
    std::string check_id;
    std::int64_t level = 0; // 0 when the check is not tied to a level
    std::vector<std::pair<std::string, std::string>> parameters;
    std::int64_t comparisons = 0;
    std::vector<Violation> violations;
    std::vector<std::string> notes;

    bool passed() const { return violations.empty(); }

    void param(const std::string& key, std::int64_t value) { parameters.emplace_back(key, std::to_string(value)); }
    void param(const std::string& key, const std::string& value) { parameters.emplace_back(key, value); }

    /// Records one comparison; a mismatch becomes a violation.
    bool compare(std::vector<std::pair<std::string, std::int64_t>> indices, const Rational& lhs, const Rational& rhs);

    /// Sorts violations by their index tuples.
    void finalize();
};

/// One JSON object, keys in a fixed order, all numbers exact decimal strings.
std::string to_json(const Report& r);
/// Multi-line summary; violations listed up to `max_listed`.
std::string to_human(const Report& r, std::size_t max_listed = 20);

} // namespace qrep
