#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lbforge {

using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// "a" or "a/b", lowest terms, no decimal point.
std::string to_string(const Rational& q);

/// Accepts "a", "-a", "a/b". Throws Error(Parse) on anything else or b = 0.
Rational parse_rational(std::string_view text);

Rational binomial(int n, int k);

}  // namespace lbforge
