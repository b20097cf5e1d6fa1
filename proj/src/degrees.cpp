#include "gpoly/degrees.hpp"

namespace gpoly {

namespace {

void require_ring_codomain(const CarrierDescriptor& codomain) {
  if (codomain.rank() != 1 || codomain.kind() == CarrierKind::PositiveRationals ||
      codomain.kind() == CarrierKind::NaturalsFromOne)
    throw Error(ErrorKind::NonRingCodomain, codomain.describe());
}

}  // namespace

FunctionHandle product(const FunctionHandle& f, const FunctionHandle& g) {
  if (f.domain() != g.domain() || f.codomain() != g.codomain())
    throw Error(ErrorKind::DescriptorMismatch, "product operands must share domain and codomain");
  if (f.arity() != 1 || g.arity() != 1)
    throw Error(ErrorKind::ArityMismatch, "product needs arity-1 functions");
  require_ring_codomain(f.codomain());
  if (f.expression() && g.expression()) {
    return FunctionHandle::from_expression(*f.expression() * *g.expression(), f.domain(), 1,
                                           f.codomain(),
                                           "(" + f.label() + ")*(" + g.label() + ")");
  }
  FunctionHandle fc = f, gc = g;
  return FunctionHandle::derived(f.domain(), 1, f.codomain(),
                                 "(" + f.label() + ")*(" + g.label() + ")",
                                 [fc, gc](std::span<const Element> args) {
                                   return mul(fc(args), gc(args));
                                 });
}

FunctionHandle compose(const FunctionHandle& outer, const FunctionHandle& inner) {
  if (outer.domain() != inner.codomain())
    throw Error(ErrorKind::DescriptorMismatch,
                "outer domain " + outer.domain().describe() + " != inner codomain " +
                    inner.codomain().describe());
  if (outer.arity() != 1 || inner.arity() != 1)
    throw Error(ErrorKind::ArityMismatch, "compose needs arity-1 functions");
  const CarrierKind mid = inner.codomain().kind();
  // symbolic collapse is only sound when no reduction happens in the middle
  if (outer.expression() && inner.expression() &&
      (mid == CarrierKind::Rationals || mid == CarrierKind::FreeAbelian)) {
    PolyExpression e = outer.expression()->substitute({*inner.expression()});
    return FunctionHandle::from_expression(std::move(e), inner.domain(), 1, outer.codomain(),
                                           "(" + outer.label() + ")o(" + inner.label() + ")");
  }
  FunctionHandle oc = outer, ic = inner;
  return FunctionHandle::derived(inner.domain(), 1, outer.codomain(),
                                 "(" + outer.label() + ")o(" + inner.label() + ")",
                                 [oc, ic](std::span<const Element> args) {
                                   return oc(ic(args));
                                 });
}

DegreeReport degree_of(const FunctionHandle& f, unsigned probe_limit, const Strategy& strategy,
                       std::optional<unsigned> claimed_bound) {
  DegreeReport report;
  report.claimed_bound = claimed_bound;
  Verdict last;
  for (unsigned m = 0; m <= probe_limit; ++m) {
    Verdict v = frechet_test(f, m + 1, strategy);
    if (v.holds) {
      report.measured_degree = m;
      report.verdict_above = v;
      if (m >= 1) report.verdict_at_degree = frechet_test(f, m, strategy);
      return report;
    }
    last = v;
  }
  report.verdict_above = last;  // the failing verdict at the probe limit
  return report;
}

Verdict monomial_product_check(const FunctionHandle& f, const FunctionHandle& g, unsigned n,
                               unsigned m, const Strategy& strategy, const VerifyOptions& opts) {
  require_ring_codomain(f.codomain());
  if (!factorial_bijective(f.codomain(), n + m))
    throw Error(ErrorKind::DivisibilityUnavailable,
                "division by " + std::to_string(n + m) + "! unavailable on " +
                    f.codomain().describe());
  if (opts.budget > 0) {
    Strategy spot = f.domain().finite() ? Strategy::exhaustive()
                                        : Strategy::sampled(opts.seed, opts.budget, opts.box);
    if (!is_monomial(f, n, spot).holds)
      throw Error(ErrorKind::NotPolynomial, "'" + f.label() + "' is not a degree-" +
                                                std::to_string(n) + " monomial");
    if (!is_monomial(g, m, spot).holds)
      throw Error(ErrorKind::NotPolynomial, "'" + g.label() + "' is not a degree-" +
                                                std::to_string(m) + " monomial");
  }
  FunctionHandle fg = product(f, g);
  return scan_tuples(f.domain(), 2, strategy, [&](std::span<const Element> xs) {
    Element lhs = divide_by_factorial(iterated_difference_value(fg, xs[1], n + m, xs[0]), n + m);
    return lhs == fg(xs[1]);
  });
}

CarrierDescriptor product_carrier(const CarrierDescriptor& s, const CarrierDescriptor& r) {
  if (s.kind() != r.kind())
    throw Error(ErrorKind::InvalidConfig,
                "product carrier needs matching kinds, got " + s.describe() + " x " +
                    r.describe());
  if (s.kind() == CarrierKind::CyclicProduct) {
    std::vector<Int> moduli = s.moduli();
    moduli.insert(moduli.end(), r.moduli().begin(), r.moduli().end());
    return CarrierDescriptor::cyclic(std::move(moduli));
  }
  int rank = s.rank() + r.rank();
  switch (s.kind()) {
    case CarrierKind::FreeAbelian: return CarrierDescriptor::free_abelian(rank);
    case CarrierKind::Rationals: return CarrierDescriptor::rationals(rank);
    case CarrierKind::PositiveRationals: return CarrierDescriptor::positive_rationals(rank);
    case CarrierKind::NaturalsFromOne: return CarrierDescriptor::naturals_from_one(rank);
    default: break;
  }
  throw Error(ErrorKind::InvalidConfig, "unsupported product carrier");
}

Verdict two_domain_product_check(const FunctionHandle& f, const FunctionHandle& g, unsigned n,
                                 unsigned m, const Strategy& strategy, const VerifyOptions& opts) {
  if (f.codomain() != g.codomain())
    throw Error(ErrorKind::DescriptorMismatch, "factors must share a codomain");
  require_ring_codomain(f.codomain());
  if (!factorial_bijective(f.codomain(), n + m))
    throw Error(ErrorKind::DivisibilityUnavailable,
                "division by " + std::to_string(n + m) + "! unavailable on " +
                    f.codomain().describe());
  if (opts.budget > 0) {
    Strategy spot_f = f.domain().finite() ? Strategy::exhaustive()
                                          : Strategy::sampled(opts.seed, opts.budget, opts.box);
    Strategy spot_g = g.domain().finite() ? Strategy::exhaustive()
                                          : Strategy::sampled(opts.seed, opts.budget, opts.box);
    if (!is_monomial(f, n, spot_f).holds || !is_monomial(g, m, spot_g).holds)
      throw Error(ErrorKind::NotPolynomial, "factors are not monomials of the stated degrees");
  }
  CarrierDescriptor prod = product_carrier(f.domain(), g.domain());
  const int sr = f.domain().rank();
  FunctionHandle fc = f, gc = g;
  CarrierDescriptor sd = f.domain(), rd = g.domain();
  FunctionHandle phi = FunctionHandle::derived(
      prod, 1, f.codomain(), "phi(" + f.label() + "," + g.label() + ")",
      [fc, gc, sd, rd, sr](std::span<const Element> args) {
        const std::vector<Rational>& c = args[0].coords();
        Element x(sd, std::vector<Rational>(c.begin(), c.begin() + sr));
        Element y(rd, std::vector<Rational>(c.begin() + sr, c.end()));
        return mul(fc(x), gc(y));
      });
  return scan_tuples(prod, 2, strategy, [&](std::span<const Element> xs) {
    Element lhs = divide_by_factorial(iterated_difference_value(phi, xs[1], n + m, xs[0]), n + m);
    return lhs == phi(xs[1]);
  });
}

}  // namespace gpoly
