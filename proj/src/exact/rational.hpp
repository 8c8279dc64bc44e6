#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace elsv {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation; values built from raw parts go through make_rat.
using Rat = mpq_class;
using BigInt = mpz_class;

Rat make_rat(const BigInt& num, const BigInt& den);
Rat make_rat(long num, long den = 1);

/// "p/q" with the denominator always present, e.g. "-1/24", "3/1".
std::string to_pq_string(const Rat& x);

/// "p/q", or "p" for integers.
std::string to_display_string(const Rat& x);

/// Accepts "p/q" or "p". Zero denominators and stray characters are parse
/// errors.
Rat parse_rat(std::string_view text);

BigInt factorial(unsigned n);
/// (2k-1)!! for k >= 0, computed iteratively; (-1)!! = 1.
BigInt odd_double_factorial(long k);
/// n!! for n >= -1.
BigInt double_factorial(long n);
BigInt binomial(unsigned n, unsigned k);

Rat rat_pow(const Rat& base, long exponent);

}  // namespace elsv
