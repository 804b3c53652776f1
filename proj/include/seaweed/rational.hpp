#pragma once

#include <gmpxx.h>

#include <string>

namespace seaweed {

using Rational = mpq_class;
using Integer = mpz_class;

// Canonical "p/q" text; integers print without a denominator.
std::string to_string(const Rational& q);

// Accepts "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);

}  // namespace seaweed
