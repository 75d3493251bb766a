#ifndef CTID_EXACT_ARITH_HPP
#define CTID_EXACT_ARITH_HPP

#include <string>

#include <gmpxx.h>

namespace ctid
{

// Arbitrary-precision integer and rational. GMP keeps zero canonical and
// mpq_class values are normalized through make_rational/normalize below.
using Integer = mpz_class;
using Rational = mpq_class;

// num/den in lowest terms with a positive denominator. Throws
// std::domain_error on a zero denominator.
Rational make_rational(const Integer &num, const Integer &den = 1);

// Re-establishes den > 0 and gcd(|num|, den) = 1. Idempotent.
Rational &normalize(Rational &q);

bool is_integer(const Rational &q);

// "p" for integral values, "p/q" otherwise.
std::string to_decimal(const Integer &z);
std::string to_decimal(const Rational &q);

// Parses the strings produced by to_decimal. Throws std::invalid_argument.
Integer parse_integer(const std::string &s);
Rational parse_rational(const std::string &s);

Integer factorial(long n);

// C(n, k) for n >= 0; zero when k lies outside [0, n].
Integer binomial(long n, long k);

// C(2i, i) / (i + 1), so catalan(1) = 1, catalan(2) = 2, catalan(3) = 5.
// Requires i >= 1.
Integer catalan(long i);

// catalan(1) * ... * catalan(n); 1 for n = 0.
Integer catalan_product(long n);

} // namespace ctid

#endif
