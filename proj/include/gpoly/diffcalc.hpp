#pragma once

#include <utility>

#include "gpoly/funcspace.hpp"
#include "gpoly/sampling.hpp"

namespace gpoly {

/// One term of the signed expansion of a mixed difference.
struct SignedTerm {
  int sign;                // +1 or -1
  std::vector<bool> eps;   // which steps the point includes
  Element point;           // z + sum_{eps_i = 1} x_i
};

/// Delta_h f(x) = f(x+h) - f(x). Symbolic when f is expression-backed.
FunctionHandle forward_difference(const FunctionHandle& f, const Element& h);

/// Delta_{h_1}...Delta_{h_m} f as a handle (left fold of forward_difference;
/// direct signed-expansion evaluator past depth 6).
FunctionHandle mixed_difference(const FunctionHandle& f, std::span<const Element> hs);

/// Value of the mixed difference at x via the 2^m signed expansion.
Element mixed_difference_value(const FunctionHandle& f, std::span<const Element> hs,
                               const Element& x);

/// Delta_h^m f(x).
Element iterated_difference_value(const FunctionHandle& f, const Element& h, unsigned m,
                                  const Element& x);

/// The 2^m signed terms whose sum is Delta_{x_1}...Delta_{x_m} f(z).
std::vector<SignedTerm> signed_expansion(const FunctionHandle& f, const Element& z,
                                         std::span<const Element> xs);

/// Condition (c): all order-m mixed differences vanish everywhere.
Verdict frechet_test(const FunctionHandle& f, unsigned order, const Strategy& strategy);

/// Condition (b): order-m mixed differences vanish at base points x_1+...+x_m.
Verdict frechet_shifted_test(const FunctionHandle& f, unsigned order, const Strategy& strategy);

/// Fréchet test for an arity-k handle, differencing all k slots jointly
/// (the function is viewed as living on the product semigroup S^k).
Verdict frechet_test_multi(const FunctionHandle& f, unsigned order, const Strategy& strategy);

/// Both sides of the difference Leibniz formula at (x, h), order m.
std::pair<Element, Element> leibniz_difference(const FunctionHandle& f, const FunctionHandle& g,
                                               const Element& x, const Element& h, unsigned m);

}  // namespace gpoly
