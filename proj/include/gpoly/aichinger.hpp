#pragma once

#include "gpoly/canonical.hpp"

namespace gpoly {

/// One signed evaluation point of a witness function: f(z + sum_{eps_j} x_j).
struct WitnessTerm {
  int sign;               // +1 or -1
  std::vector<bool> eps;  // over the m+1 equation slots; eps[i] is false for g_{i+1}
};

/// A certificate that f (or its translate by `basepoint`) satisfies the
/// degree-m sum-splitting equation: f(x_1+...+x_{m+1}) = sum_i g_i, where g_i
/// never reads slot i.
struct AichingerWitness {
  int m = 0;                        // degree bound; gs.size() == m+1 (m == -1 after the last peel)
  std::vector<FunctionHandle> gs;   // gs[i] has arity m and omits slot i+1
  Element basepoint;
  bool translated = false;          // witness certifies x -> f(basepoint + x)
  std::vector<std::vector<WitnessTerm>> terms;  // per g; empty for opaque handles
};

/// Does f(x_1+...+x_{m+1}) = sum_i g_i hold on the tested tuples?
Verdict verify(const FunctionHandle& f, const AichingerWitness& w, const Strategy& strategy);

/// Build a witness from the signed expansion of the vanishing mixed
/// difference at z, grouping each term under the smallest omitted slot.
/// Prechecks the order-(m+1) Fréchet condition on `opts.budget` probes.
AichingerWitness construct_witnesses(const FunctionHandle& f, unsigned m, const Element& z,
                                     const VerifyOptions& opts = {});
AichingerWitness construct_witnesses(const FunctionHandle& f, unsigned m,
                                     const VerifyOptions& opts = {});

/// One differencing step: (Delta_h f, a witness one degree lower).
std::pair<FunctionHandle, AichingerWitness> peel(const FunctionHandle& f,
                                                 const AichingerWitness& w, const Element& h);

}  // namespace gpoly
