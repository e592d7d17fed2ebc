#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace robtree {

// Exact rational number. GMP keeps values canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;

// Parses "3", "-2", "1/4", "0.125", "12.702", "1e-3". Decimal text is read
// as an exact decimal fraction, never through a double.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Exact conversion; mpq_class has no long long constructor.
Rational from_integer(long long value);

// num/den in lowest terms. Throws DomainError if den is 0. Prefer this to
// the two-argument mpq_class constructor, which does not canonicalize.
Rational make_rational(long long num, long long den);

double to_double(const Rational& value);

// Exact decimal expansion if the denominator has only factors 2 and 5.
bool has_finite_decimal(const Rational& value);

// Decimal text for LP files: exact when finite, otherwise rounded to
// `significant` significant digits.
std::string to_decimal_string(const Rational& value, int significant = 15);

// ceil(log2(x)) and floor(log2(x)) for x >= 1.
int ceil_log2(long long x);
int floor_log2(long long x);

}  // namespace robtree
