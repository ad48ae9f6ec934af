#ifndef LIFTCOVER_RATIONAL_HPP
#define LIFTCOVER_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace liftcover {

// Every construction path below yields canonical values (lowest terms,
// positive denominator). Note that mpq_class(p, q) itself does not
// canonicalize, so prefer make_rational for literal fractions.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// Accepts "p", "-p", "p/q". Throws ParseError on anything else.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
Integer round_of(const Rational& q);
bool is_integral(const Rational& q);
int sign_of(const Rational& q);

}  // namespace liftcover

#endif
