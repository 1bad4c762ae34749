#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lineup {

using Integer = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);
std::string format_integer(const Integer& value);

Rational dot(const Vector& a, const Vector& b);
Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const Vector& b);

Vector to_rational(const IntVector& v);

/// Clears denominators and divides by the gcd of the entries. The sign is
/// kept. The zero vector maps to the zero vector.
IntVector primitive(const Vector& v);
IntVector primitive(IntVector v);

bool is_zero(const Vector& v);
bool is_zero(const IntVector& v);

}  // namespace lineup
