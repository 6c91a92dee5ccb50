#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace dgalab {

using Q = mpq_class;
using Z = mpz_class;

// Canonical text form: "p" for integers, "p/q" otherwise, always in lowest terms.
std::string to_string(const Q& value);

// Accepts "p" or "p/q" with an optional leading sign. Throws std::invalid_argument.
Q parse_rational(std::string_view text);

// Negative exponents are allowed for nonzero bases.
Q pow(const Q& base, long exponent);

bool is_integer(const Q& value);

// The rational r with r^k == value and r >= 0 when k is even, if one exists.
std::optional<Q> exact_root(const Q& value, unsigned long k);

}  // namespace dgalab
