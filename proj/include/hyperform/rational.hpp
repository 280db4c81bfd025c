#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hyperform {

/// Exact rational scalar. GMP keeps it in lowest terms with a positive
/// denominator after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

using Vector = std::vector<Rational>;
using Point = std::vector<Rational>;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q". Decimal notation is rejected.
Rational parse_rational(std::string_view text);

int sign(const Rational& q);

Rational dot(const Vector& a, const Vector& b);

bool is_zero(const Vector& v);

}  // namespace hyperform
