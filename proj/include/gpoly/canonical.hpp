#pragma once

#include "gpoly/diffcalc.hpp"

namespace gpoly {

/// Randomized certification budget for semantic preconditions.
struct VerifyOptions {
  unsigned budget = 50;
  std::uint64_t seed = 7;
  long box = 10;
};

/// A k-additive map S^k -> H with an optional symmetry claim. k = 0 is a
/// constant. Lazy: evaluation goes through the backing handle.
class MultiAdditiveMap {
 public:
  MultiAdditiveMap(int arity, FunctionHandle evaluator, bool symmetric);

  int arity() const { return arity_; }
  const CarrierDescriptor& domain() const { return evaluator_.domain(); }
  const CarrierDescriptor& codomain() const { return evaluator_.codomain(); }
  const FunctionHandle& evaluator() const { return evaluator_; }
  bool symmetric() const { return symmetric_; }

  Element operator()(std::span<const Element> args) const { return evaluator_(args); }
  Element constant_value() const;  // arity 0 only

 private:
  int arity_;
  FunctionHandle evaluator_;
  bool symmetric_;
};

/// The unique symmetric components A^0..A^m of Theorem-4 form, plus the
/// basepoint used to extract them.
struct Decomposition {
  std::vector<MultiAdditiveMap> components;  // index = arity
  Element basepoint;

  unsigned degree_bound() const { return static_cast<unsigned>(components.size()) - 1; }
};

/// x -> A(x,...,x).
FunctionHandle diagonalize(const MultiAdditiveMap& A);

/// Average of A over all slot permutations; needs division by k!.
MultiAdditiveMap symmetrize(const MultiAdditiveMap& A);

/// A^m(h_1..h_m) = (1/m!) Delta_{h_1}...Delta_{h_m} f(z). Certifies slot
/// additivity and basepoint independence on `opts.budget` probes and throws
/// NotPolynomial on failure. Symbolic for expression-backed f.
MultiAdditiveMap polarize(const FunctionHandle& f, unsigned m, const Element& z,
                          const VerifyOptions& opts = {});

/// Peel A^m, A^{m-1}, ..., A^1, A^0 off f.
Decomposition decompose(const FunctionHandle& f, unsigned m, const Element& z,
                        const VerifyOptions& opts = {});
Decomposition decompose(const FunctionHandle& f, unsigned m, const VerifyOptions& opts = {});

/// x -> A^0 + sum_k diag(A^k)(x).
FunctionHandle recompose(const Decomposition& d);

Verdict is_multiadditive(const MultiAdditiveMap& A, const Strategy& strategy);

Verdict is_symmetric(const MultiAdditiveMap& A, const Strategy& strategy);

/// Generalized-monomial test: (1/n!) Delta_h^n f(x) = f(h) for all (x, h).
Verdict is_monomial(const FunctionHandle& f, unsigned n, const Strategy& strategy);

}  // namespace gpoly
