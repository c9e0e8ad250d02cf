#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hornsys {

using Int = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q"; q must be nonzero.
Rational parse_rational(const std::string& s);

// Renders as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

using RatVec = std::vector<Rational>;
using IntVec = std::vector<Int>;

}  // namespace hornsys
