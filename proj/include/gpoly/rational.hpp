#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "gpoly/error.hpp"

namespace gpoly {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

/// Least nonnegative residue of an integer-valued rational mod n.
Int mod_reduce(const Int& value, const Int& n);

/// Inverse of a mod n, or nullopt-equivalent via throwing DivisibilityUnavailable.
Int mod_inverse(const Int& a, const Int& n);

/// Reduce a rational a/b into Z_n as a * b^{-1} mod n.
/// Throws DivisibilityUnavailable when b is not invertible mod n.
Int rational_mod(const Rational& q, const Int& n);

std::string to_string(const Rational& q);
Rational rational_from_string(const std::string& text);

}  // namespace gpoly
