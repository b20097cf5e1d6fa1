#include "gpoly/rational.hpp"

#include <sstream>

namespace gpoly {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NoZeroElement: return "NoZeroElement";
    case ErrorKind::DivisibilityUnavailable: return "DivisibilityUnavailable";
    case ErrorKind::InfiniteCarrier: return "InfiniteCarrier";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::MissingEntry: return "MissingEntry";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::NotPolynomial: return "NotPolynomial";
    case ErrorKind::NotMultiadditive: return "NotMultiadditive";
    case ErrorKind::NonRingCodomain: return "NonRingCodomain";
    case ErrorKind::NonCancellative: return "NonCancellative";
    case ErrorKind::NoBasepoint: return "NoBasepoint";
    case ErrorKind::NotInCarrier: return "NotInCarrier";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "UnknownError";
}

Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Int mod_reduce(const Int& value, const Int& n) {
  Int r = value % n;
  if (r < 0) r += n;
  return r;
}

Int mod_inverse(const Int& a, const Int& n) {
  // extended Euclid
  Int old_r = mod_reduce(a, n), r = n;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    std::ostringstream os;
    os << a << " is not invertible mod " << n;
    throw Error(ErrorKind::DivisibilityUnavailable, os.str());
  }
  return mod_reduce(old_s, n);
}

Int rational_mod(const Rational& q, const Int& n) {
  Int num = mod_reduce(numerator(q), n);
  Int den = denominator(q);
  if (den == 1) return num;
  return mod_reduce(num * mod_inverse(den, n), n);
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

Rational rational_from_string(const std::string& text) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw Error(ErrorKind::SyntaxError, "bad rational literal '" + text + "'");
  }
}

}  // namespace gpoly
