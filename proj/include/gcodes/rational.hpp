#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gcodes {

// Arbitrary-precision rational. mpq_class keeps numerator/denominator coprime
// with a positive denominator once canonicalized; every helper below returns
// canonical values.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" (q > 0 after sign normalization). Throws ParseError.
Rational parse_rational(std::string_view text);

// GMP canonical text: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

Integer floor_div(const Integer& a, const Integer& b);
Integer positive_mod(const Integer& a, const Integer& m);

long long lcm_ll(long long a, long long b);

}  // namespace gcodes
