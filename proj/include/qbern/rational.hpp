#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qbern {

/// Exact coefficient field. gmpxx keeps results of arithmetic canonical; values
/// built from raw numerator/denominator pairs go through make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// "p/r" in lowest terms, or "p" for integers.
std::string to_string(const Rational& x);

/// Accepts "p", "-p", "p/r"; the result is canonicalized. Throws
/// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// x^e for any integer e (x != 0 when e < 0).
Rational pow(const Rational& x, long e);

bool is_integer(const Rational& x);

/// Exact d-th root when it exists (d = 2 or 4 are the ones used here).
bool exact_root(const Rational& x, unsigned d, Rational& root);

}  // namespace qbern
