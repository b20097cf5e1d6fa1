#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "gpoly/funcspace.hpp"
#include "gpoly/sampling.hpp"

namespace gpoly::testing {

inline Element el(const CarrierDescriptor& d, std::initializer_list<long long> coords) {
  std::vector<Rational> cs;
  for (long long c : coords) cs.emplace_back(c);
  return Element(d, std::move(cs));
}

inline Element el(const CarrierDescriptor& d, const std::string& text) {
  std::vector<Rational> cs;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    cs.push_back(rational_from_string(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return Element(d, std::move(cs));
}

inline FunctionHandle expr(const std::string& text, const CarrierDescriptor& d, int arity = 1) {
  CarrierDescriptor h = d.has_zero() ? d
                        : d.kind() == CarrierKind::PositiveRationals
                            ? CarrierDescriptor::rationals(1)
                            : CarrierDescriptor::free_abelian(1);
  return parse_expression(text, d, arity, h);
}

inline FunctionHandle expr(const std::string& text, const CarrierDescriptor& d,
                           const CarrierDescriptor& h, int arity = 1) {
  return parse_expression(text, d, arity, h);
}

/// Random polynomial with small integer coefficients, nvars variables,
/// total degree <= maxdeg.
inline PolyExpression random_poly(Rng& rng, int nvars, unsigned maxdeg, int terms = 6) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<unsigned> deg(0, maxdeg);
  PolyExpression p(nvars);
  for (int t = 0; t < terms; ++t) {
    unsigned budget = deg(rng);
    std::vector<unsigned> exps(nvars, 0);
    for (int v = 0; v < nvars && budget > 0; ++v) {
      std::uniform_int_distribution<unsigned> take(0, budget);
      unsigned e = v + 1 == nvars ? budget : take(rng);
      exps[v] = e;
      budget -= e;
    }
    int c = coeff(rng);
    if (c != 0) p.add_term(std::move(exps), Rational(c));
  }
  return p;
}

}  // namespace gpoly::testing
