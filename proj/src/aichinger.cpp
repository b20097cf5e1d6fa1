#include "gpoly/aichinger.hpp"

namespace gpoly {

Verdict verify(const FunctionHandle& f, const AichingerWitness& w, const Strategy& strategy) {
  if (f.arity() != 1) throw Error(ErrorKind::ArityMismatch, "verify needs an arity-1 function");
  if (static_cast<int>(w.gs.size()) != w.m + 1)
    throw Error(ErrorKind::InvalidConfig, "witness must carry m+1 functions");
  for (const FunctionHandle& g : w.gs) {
    if (g.arity() != w.m)
      throw Error(ErrorKind::ArityMismatch, "witness functions must have arity m");
    if (g.domain() != f.domain() || g.codomain() != f.codomain())
      throw Error(ErrorKind::DescriptorMismatch, "witness functions must match f");
  }
  const size_t slots = static_cast<size_t>(w.m + 1);
  return scan_tuples(f.domain(), slots, strategy, [&](std::span<const Element> xs) {
    Element lhs = w.translated ? w.basepoint : zero(f.domain());
    bool first = !w.translated;
    for (const Element& x : xs) {
      if (first) {
        lhs = x;
        first = false;
      } else {
        lhs = add(lhs, x);
      }
    }
    // m == -1: empty sum of arguments; the equation degenerates to f(z) = 0
    Element left = f(lhs);
    Element right = zero(f.codomain());
    for (size_t i = 0; i < w.gs.size(); ++i) {
      std::vector<Element> args;
      args.reserve(slots - 1);
      for (size_t j = 0; j < slots; ++j)
        if (j != i) args.push_back(xs[j]);
      right = add(right, w.gs[i](args));
    }
    return left == right;
  });
}

AichingerWitness construct_witnesses(const FunctionHandle& f, unsigned m, const Element& z,
                                     const VerifyOptions& opts) {
  if (f.arity() != 1)
    throw Error(ErrorKind::ArityMismatch, "construct_witnesses needs an arity-1 function");
  if (z.descriptor() != f.domain())
    throw Error(ErrorKind::NoBasepoint, "basepoint is not a point of " + f.domain().describe());
  if (opts.budget > 0) {
    Strategy spot = f.domain().finite() ? Strategy::exhaustive()
                                        : Strategy::sampled(opts.seed, opts.budget, opts.box);
    if (spot.mode == Strategy::Mode::Exhaustive) {
      // cap the spot check; fall back to sampling when the tuple space is big
      Int tuples = 1;
      for (unsigned i = 0; i < m + 2; ++i) tuples *= f.domain().cardinality();
      if (tuples > spot.budget) spot = Strategy::sampled(opts.seed, opts.budget, opts.box);
    }
    Verdict pre = frechet_test(f, m + 1, spot);
    if (!pre.holds)
      throw Error(ErrorKind::NotPolynomial,
                  "'" + f.label() + "' fails the order-" + std::to_string(m + 1) +
                      " vanishing precondition");
  }

  const size_t slots = m + 1;
  std::vector<std::vector<WitnessTerm>> groups(slots);
  // every term except the full-support one, which becomes the LHS
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << slots) - 1; ++mask) {
    std::vector<bool> eps(slots, false);
    unsigned ones = 0;
    size_t omit = slots;
    for (size_t j = 0; j < slots; ++j) {
      if (mask & (std::uint64_t(1) << j)) {
        eps[j] = true;
        ++ones;
      } else if (omit == slots) {
        omit = j;  // smallest index with eps = 0
      }
    }
    int sign = ((m - ones) % 2 == 0) ? 1 : -1;
    groups[omit].push_back(WitnessTerm{sign, std::move(eps)});
  }

  AichingerWitness w{static_cast<int>(m), {}, z,
                     !(f.domain().has_zero() && is_zero(z)), groups};
  for (size_t i = 0; i < slots; ++i) {
    FunctionHandle fc = f;
    Element base = z;
    std::vector<WitnessTerm> terms = groups[i];
    size_t omit = i;
    size_t nslots = slots;
    w.gs.push_back(FunctionHandle::derived(
        f.domain(), static_cast<int>(m), f.codomain(),
        "g" + std::to_string(i + 1) + "(" + f.label() + ")",
        [fc, base, terms, omit, nslots](std::span<const Element> args) {
          Element acc = zero(fc.codomain());
          for (const WitnessTerm& t : terms) {
            Element point = base;
            size_t argpos = 0;
            for (size_t j = 0; j < nslots; ++j) {
              if (j == omit) continue;
              if (t.eps[j]) point = add(point, args[argpos]);
              ++argpos;
            }
            Element value = fc(point);
            acc = t.sign > 0 ? add(acc, value) : sub(acc, value);
          }
          return acc;
        }));
  }
  return w;
}

AichingerWitness construct_witnesses(const FunctionHandle& f, unsigned m,
                                     const VerifyOptions& opts) {
  return construct_witnesses(f, m, default_basepoint(f.domain()), opts);
}

std::pair<FunctionHandle, AichingerWitness> peel(const FunctionHandle& f,
                                                 const AichingerWitness& w, const Element& h) {
  if (h.descriptor() != f.domain())
    throw Error(ErrorKind::DescriptorMismatch, "step not in the function's domain");
  if (w.m < 0) throw Error(ErrorKind::InvalidConfig, "witness is already fully peeled");
  FunctionHandle f1 = forward_difference(f, h);

  const bool has_zero = f.domain().has_zero();
  Element pinned = has_zero ? zero(f.domain()) : default_basepoint(f.domain());
  Element new_base = has_zero ? w.basepoint : add(w.basepoint, pinned);
  bool new_translated = has_zero ? w.translated : true;

  AichingerWitness w1{w.m - 1, {}, new_base, new_translated, {}};
  for (int i = 1; i <= w.m; ++i) {
    // the new g_i differences old g_{i+1} in its first slot, pinned at x_1
    FunctionHandle old_g = w.gs[static_cast<size_t>(i)];
    Element lo = pinned, hi = add(pinned, h);
    w1.gs.push_back(FunctionHandle::derived(
        f.domain(), w.m - 1, f.codomain(), "peel(" + old_g.label() + ")",
        [old_g, lo, hi](std::span<const Element> args) {
          std::vector<Element> at_hi, at_lo;
          at_hi.reserve(args.size() + 1);
          at_lo.reserve(args.size() + 1);
          at_hi.push_back(hi);
          at_lo.push_back(lo);
          for (const Element& a : args) {
            at_hi.push_back(a);
            at_lo.push_back(a);
          }
          return sub(old_g(at_hi), old_g(at_lo));
        }));
  }
  return {std::move(f1), std::move(w1)};
}

}  // namespace gpoly
