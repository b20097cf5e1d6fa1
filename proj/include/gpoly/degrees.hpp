#pragma once

#include "gpoly/canonical.hpp"

namespace gpoly {

struct DegreeReport {
  std::optional<unsigned> claimed_bound;
  std::optional<unsigned> measured_degree;   // nullopt: exceeds the probe limit
  std::optional<Verdict> verdict_at_degree;  // fails when the degree is measured exactly
  Verdict verdict_above;                     // holds at order measured_degree + 1
};

/// Pointwise product f*g; symbolic when both sides carry closed forms.
FunctionHandle product(const FunctionHandle& f, const FunctionHandle& g);

/// x -> outer(inner(x)); symbolic when the intermediate group is torsion-free
/// and both sides carry closed forms.
FunctionHandle compose(const FunctionHandle& outer, const FunctionHandle& inner);

/// Smallest m <= probe_limit whose order-(m+1) mixed differences all vanish.
DegreeReport degree_of(const FunctionHandle& f, unsigned probe_limit, const Strategy& strategy,
                       std::optional<unsigned> claimed_bound = std::nullopt);

/// (1/(n+m)!) Delta_h^{n+m} (f*g)(x) = (f*g)(h) on tested (x, h).
Verdict monomial_product_check(const FunctionHandle& f, const FunctionHandle& g, unsigned n,
                               unsigned m, const Strategy& strategy,
                               const VerifyOptions& opts = {});

/// Same identity for phi(x,y) = f(x) g(y) on the product semigroup S x R.
Verdict two_domain_product_check(const FunctionHandle& f, const FunctionHandle& g, unsigned n,
                                 unsigned m, const Strategy& strategy,
                                 const VerifyOptions& opts = {});

/// S x R with concatenated coordinates; both factors must share a kind.
CarrierDescriptor product_carrier(const CarrierDescriptor& s, const CarrierDescriptor& r);

}  // namespace gpoly
