#include "qrep/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace qrep {

bool Report::compare(std::vector<std::pair<std::string, std::int64_t>> indices, const Rational& lhs, const Rational& rhs)
{
    ++comparisons;
    if (lhs == rhs) return true;
    violations.push_back(Violation{std::move(indices), lhs, rhs});
    return false;
}

void Report::finalize()
{
    std::stable_sort(violations.begin(), violations.end(),
                     [](const Violation& a, const Violation& b) { return a.indices < b.indices; });
}

std::string to_json(const Report& r)
{
    nlohmann::ordered_json j;
    j["check_id"] = r.check_id;
    if (r.level != 0) j["level"] = r.level;
    else j["level"] = nullptr;
    auto params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    j["parameters"] = params;
    j["status"] = r.passed() ? "pass" : "fail";
    j["comparisons"] = r.comparisons;
    auto vs = nlohmann::ordered_json::array();
    const bool flat = !r.violations.empty() && r.violations.front().indices.size() == 2 &&
                      r.violations.front().indices.front().first == "p_exp";
    for (const auto& v : r.violations) {
        nlohmann::ordered_json x;
        if (flat) {
            for (const auto& [k, i] : v.indices) x[k] = i;
        } else {
            auto idx = nlohmann::ordered_json::object();
            for (const auto& [k, i] : v.indices) idx[k] = i;
            x["indices"] = idx;
        }
        x["lhs"] = to_string(v.lhs);
        x["rhs"] = to_string(v.rhs);
        vs.push_back(std::move(x));
    }
    j["violations"] = std::move(vs);
    j["notes"] = r.notes;
    return j.dump();
}

std::string to_human(const Report& r, std::size_t max_listed)
{
    std::ostringstream os;
    os << r.check_id;
    if (r.level != 0) os << " (level " << r.level << ")";
    os << ": " << (r.passed() ? "PASS" : "FAIL") << ", " << r.comparisons << " comparisons";
    if (!r.passed()) os << ", " << r.violations.size() << " violations";
    os << "\n";
    if (!r.parameters.empty()) {
        os << "  parameters:";
        for (const auto& [k, v] : r.parameters) os << " " << k << "=" << v;
        os << "\n";
    }
    for (std::size_t i = 0; i < r.violations.size() && i < max_listed; ++i) {
        const auto& v = r.violations[i];
        os << "  violation";
        for (const auto& [k, x] : v.indices) os << " " << k << "=" << x;
        os << ": " << to_string(v.lhs) << " != " << to_string(v.rhs) << "\n";
    }
    if (r.violations.size() > max_listed) os << "  ... " << r.violations.size() - max_listed << " more\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    return os.str();
}

} // namespace qrep
