#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qrep {

using Rational = mpq_class;
using Integer = mpz_class;

// Canonical decimal form: "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

// Parses "n" or "n/d" (optional sign); throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// num/den in lowest terms. (mpq_class(num, den) does not reduce.)
inline Rational ratio(long num, long den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

} // namespace qrep
