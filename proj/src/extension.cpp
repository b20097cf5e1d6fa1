#include "gpoly/extension.hpp"

namespace gpoly {

bool diff_equals(const FormalDifference& d1, const FormalDifference& d2) {
  require_same_descriptor(d1.plus, d1.minus);
  require_same_descriptor(d1.plus, d2.plus);
  require_same_descriptor(d2.plus, d2.minus);
  return add(d1.plus, d2.minus) == add(d2.plus, d1.minus);
}

FormalDifference embed(const Element& s) { return FormalDifference{add(s, s), s}; }

CarrierDescriptor difference_group_carrier(const CarrierDescriptor& sub) {
  if (!sub.cancellative()) throw Error(ErrorKind::NonCancellative, sub.describe());
  switch (sub.kind()) {
    case CarrierKind::PositiveRationals:
      return CarrierDescriptor::rationals(sub.rank());
    case CarrierKind::NaturalsFromOne:
      return CarrierDescriptor::free_abelian(sub.rank());
    default:
      return sub;  // already a group
  }
}

FormalDifference lift_to_difference(const CarrierDescriptor& sub, const Element& group_point) {
  if (group_point.descriptor() != difference_group_carrier(sub))
    throw Error(ErrorKind::DescriptorMismatch,
                "point is not in the difference group of " + sub.describe());
  if (sub.is_group()) return FormalDifference{group_point, zero(sub)};
  std::vector<Rational> plus(sub.rank()), minus(sub.rank());
  for (int c = 0; c < sub.rank(); ++c) {
    const Rational& g = group_point.coords()[c];
    Rational t = (g < 0 ? -g : g) + 1;
    minus[c] = t;
    plus[c] = g + t;
  }
  return FormalDifference{Element(sub, std::move(plus)), Element(sub, std::move(minus))};
}

ExtendedMultiAdditiveMap::ExtendedMultiAdditiveMap(MultiAdditiveMap base)
    : base_(std::move(base)) {}

Element ExtendedMultiAdditiveMap::evaluate(std::span<const FormalDifference> args) const {
  const unsigned n = static_cast<unsigned>(base_.arity());
  if (args.size() != n) throw Error(ErrorKind::ArityMismatch, "extended map arity mismatch");
  if (n == 0) return base_.constant_value();
  Element acc = zero(base_.codomain());
  std::vector<Element> point;
  point.reserve(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    point.clear();
    unsigned ones = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (mask & (std::uint64_t(1) << i)) {
        point.push_back(args[i].plus);
        ++ones;
      } else {
        point.push_back(args[i].minus);
      }
    }
    Element value = base_(point);
    if ((n - ones) % 2 == 0)
      acc = add(acc, value);
    else
      acc = sub(acc, value);
  }
  return acc;
}

Element ExtendedMultiAdditiveMap::evaluate(const FormalDifference& arg) const {
  return evaluate(std::span<const FormalDifference>(&arg, 1));
}

ExtendedMultiAdditiveMap extend_multiadditive(const MultiAdditiveMap& A,
                                              const VerifyOptions& opts) {
  if (!A.domain().cancellative()) throw Error(ErrorKind::NonCancellative, A.domain().describe());
  if (A.arity() > 0 && opts.budget > 0) {
    Strategy spot = Strategy::sampled(opts.seed, opts.budget, opts.box);
    Verdict additive = is_multiadditive(A, spot);
    if (!additive.holds)
      throw Error(ErrorKind::NotMultiadditive,
                  "'" + A.evaluator().label() + "' is not additive in every slot");
    Verdict sym = is_symmetric(A, spot);
    if (!sym.holds)
      throw Error(ErrorKind::NotMultiadditive,
                  "'" + A.evaluator().label() + "' is not symmetric");
  }
  return ExtendedMultiAdditiveMap(A);
}

ExtendedPolynomial::ExtendedPolynomial(Element constant,
                                       std::vector<ExtendedMultiAdditiveMap> components,
                                       CarrierDescriptor sub)
    : constant_(std::move(constant)), components_(std::move(components)), sub_(std::move(sub)) {}

Element ExtendedPolynomial::evaluate(const FormalDifference& x) const {
  Element acc = constant_;
  for (const ExtendedMultiAdditiveMap& A : components_) {
    std::vector<FormalDifference> diag(static_cast<size_t>(A.arity()), x);
    acc = add(acc, A.evaluate(diag));
  }
  return acc;
}

FunctionHandle ExtendedPolynomial::as_group_handle() const {
  CarrierDescriptor group = difference_group_carrier(sub_);
  ExtendedPolynomial self = *this;
  return FunctionHandle::derived(group, 1, constant_.descriptor(), "extension",
                                 [self](std::span<const Element> args) {
                                   return self.evaluate(
                                       lift_to_difference(self.sub_carrier(), args[0]));
                                 });
}

ExtendedPolynomial extend_polynomial(const FunctionHandle& f, unsigned m,
                                     const VerifyOptions& opts) {
  Decomposition d = decompose(f, m, opts);
  std::vector<ExtendedMultiAdditiveMap> extended;
  extended.reserve(m);
  for (size_t k = 1; k < d.components.size(); ++k)
    extended.push_back(extend_multiadditive(d.components[k], opts));
  return ExtendedPolynomial(d.components[0].constant_value(), std::move(extended), f.domain());
}

WitnessExtensionReport witness_extension_report(const FunctionHandle& f, unsigned m,
                                                const AichingerWitness& w,
                                                const Strategy& strategy,
                                                const VerifyOptions& opts) {
  ExtendedPolynomial F = extend_polynomial(f, m, opts);
  Verdict restriction = scan_tuples(f.domain(), 1, strategy, [&](std::span<const Element> xs) {
    return F.evaluate(embed(xs[0])) == f(xs[0]);
  });
  std::vector<Verdict> gs;
  gs.reserve(w.gs.size());
  for (const FunctionHandle& g : w.gs) gs.push_back(frechet_test_multi(g, m + 1, strategy));
  return WitnessExtensionReport{std::move(F), std::move(restriction), std::move(gs)};
}

}  // namespace gpoly
