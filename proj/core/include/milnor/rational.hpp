#pragma once

#include <gmpxx.h>

#include <string>

namespace milnor {

/// Exact rational scalar. GMP keeps canonical form: lowest terms, positive
/// denominator, zero stored as 0/1.
using Rational = mpq_class;

/// Parses "a", "-a" or "a/b". Throws InputError("bad-rational") on junk or a
/// zero denominator.
Rational rational_from_string(const std::string& text);

/// Canonical rational from a numerator/denominator pair (raw mpq_class
/// construction skips canonicalization).
Rational make_rational(long long num, long long den = 1);

/// "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

/// Rationals all live in the same field; nothing to check.
inline void check_same_field(const Rational&, const Rational&) {}

}  // namespace milnor
