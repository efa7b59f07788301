#pragma once

// Exact rational scalars. Every coefficient in the library is a GMP rational;
// there is no floating-point path anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace peakalg {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical text form: "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "p", "p/q" or "-p/q"; throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Exact binomial coefficient; zero outside 0 <= k <= n.
Integer binomial(long n, long k);

/// 2^k as an exact integer (k >= 0).
Integer pow2(unsigned k);

}  // namespace peakalg
