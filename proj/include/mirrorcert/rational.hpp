#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace mirrorcert {

// Exact rationals. gmpxx keeps every arithmetic result canonical (lowest
// terms, positive denominator); values built from raw parts must go through
// make_rational.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

// "num/den" with the denominator always present, e.g. "2875/1".
std::string to_string(const Rational& x);

// Accepts "n", "-n" or "n/d". Throws ParseError.
Rational parse_rational(std::string_view text);

// Exponent of p in |n|; n must be nonzero.
long multiplicity(const Integer& n, const Integer& p);

// Distinct primes dividing n, ascending (empty for 0 and +-1). Trial division
// up to 10^6; a leftover cofactor must be a prime that fits an unsigned long.
std::vector<unsigned long> prime_support(Integer n);

bool is_prime(long n);

} // namespace mirrorcert
