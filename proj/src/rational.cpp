#include "qrep/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qrep {

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

namespace {

bool is_signed_digits(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!is_signed_digits(num) || (slash != std::string_view::npos && (!is_signed_digits(den) || den.front() == '-' || den.front() == '+')))
        throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    Rational r;
    r.get_num() = Integer(n, 10);
    r.get_den() = den.empty() ? Integer(1) : Integer(std::string(den), 10);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

} // namespace qrep
