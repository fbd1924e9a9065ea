#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace covlat {

// All exact quantities in the library are GMP rationals.  mpq_class keeps
// values canonical (lowest terms, positive denominator) after every
// arithmetic operation, which is exactly the normalization contract the
// rest of the code relies on for equality tests.
using Integer = mpz_class;
using Rational = mpq_class;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses "p", "-p/q" (arbitrary precision). Throws ParseError on junk.
Rational rational_from_string(const std::string& s);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& r);

// Decimal literal such as "3.2013" or "-0.25" -> exact rational.
Rational rational_from_decimal(const std::string& s);

Rational rational_pow(const Rational& base, unsigned exp);
Integer integer_pow(const Integer& base, unsigned exp);
Integer factorial(unsigned n);

Integer floor_rat(const Rational& r);
Integer ceil_rat(const Rational& r);
// Nearest integer, ties toward +infinity.
Integer round_rat(const Rational& r);

}  // namespace covlat
