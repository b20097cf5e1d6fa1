#include "gpoly/diffcalc.hpp"

namespace gpoly {

namespace {

using ArgTuple = std::vector<Element>;

ArgTuple add_tuples(const ArgTuple& a, const ArgTuple& b) {
  ArgTuple out;
  out.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) out.push_back(add(a[i], b[i]));
  return out;
}

/// Sum over eps in {0,1}^m of (-1)^{m-|eps|} f(x + sum eps_i h_i), all slots.
Element mixed_value_tuple(const FunctionHandle& f, std::span<const ArgTuple> hs,
                          const ArgTuple& x) {
  const size_t m = hs.size();
  Element acc = zero(f.codomain());
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    ArgTuple point = x;
    unsigned ones = 0;
    for (size_t i = 0; i < m; ++i) {
      if (mask & (std::uint64_t(1) << i)) {
        point = add_tuples(point, hs[i]);
        ++ones;
      }
    }
    Element value = f(point);
    if ((m - ones) % 2 == 0)
      acc = add(acc, value);
    else
      acc = sub(acc, value);
  }
  return acc;
}

void require_unary(const FunctionHandle& f, const char* what) {
  if (f.arity() != 1)
    throw Error(ErrorKind::ArityMismatch, std::string(what) + " expects an arity-1 function");
}

}  // namespace

FunctionHandle forward_difference(const FunctionHandle& f, const Element& h) {
  require_unary(f, "forward_difference");
  if (h.descriptor() != f.domain())
    throw Error(ErrorKind::DescriptorMismatch, "step not in the function's domain");
  if (const PolyExpression* e = f.expression()) {
    const int n = e->nvars();
    std::vector<PolyExpression> images;
    images.reserve(n);
    for (int i = 0; i < n; ++i)
      images.push_back(PolyExpression::variable(n, i) +
                       PolyExpression::constant(n, h.coords()[i]));
    PolyExpression shifted = e->substitute(images);
    return FunctionHandle::from_expression(shifted - *e, f.domain(), 1, f.codomain(),
                                           "D[" + h.describe() + "](" + f.label() + ")");
  }
  FunctionHandle fc = f;
  Element step = h;
  return FunctionHandle::derived(f.domain(), 1, f.codomain(),
                                 "D[" + h.describe() + "](" + f.label() + ")",
                                 [fc, step](std::span<const Element> args) {
                                   return sub(fc(add(args[0], step)), fc(args[0]));
                                 });
}

FunctionHandle mixed_difference(const FunctionHandle& f, std::span<const Element> hs) {
  require_unary(f, "mixed_difference");
  if (hs.size() <= 6) {
    FunctionHandle acc = f;
    for (const Element& h : hs) acc = forward_difference(acc, h);
    return acc;
  }
  // deep chains evaluate through the signed expansion instead of nesting
  FunctionHandle fc = f;
  std::vector<Element> steps(hs.begin(), hs.end());
  return FunctionHandle::derived(f.domain(), 1, f.codomain(),
                                 "mixed-difference(" + f.label() + ")",
                                 [fc, steps](std::span<const Element> args) {
                                   return mixed_difference_value(fc, steps, args[0]);
                                 });
}

Element mixed_difference_value(const FunctionHandle& f, std::span<const Element> hs,
                               const Element& x) {
  require_unary(f, "mixed_difference_value");
  std::vector<ArgTuple> tuples;
  tuples.reserve(hs.size());
  for (const Element& h : hs) tuples.push_back({h});
  return mixed_value_tuple(f, tuples, {x});
}

Element iterated_difference_value(const FunctionHandle& f, const Element& h, unsigned m,
                                  const Element& x) {
  // Delta_h^m f(x) = sum_j (-1)^{m-j} C(m,j) f(x + j h)
  require_unary(f, "iterated_difference_value");
  Element acc = zero(f.codomain());
  Element point = x;
  for (unsigned j = 0; j <= m; ++j) {
    Int c = binomial(m, j);
    if ((m - j) % 2 != 0) c = -c;
    acc = add(acc, scale(c, f(point)));
    if (j < m) point = add(point, h);
  }
  return acc;
}

std::vector<SignedTerm> signed_expansion(const FunctionHandle& f, const Element& z,
                                         std::span<const Element> xs) {
  require_unary(f, "signed_expansion");
  const size_t m = xs.size();
  std::vector<SignedTerm> terms;
  terms.reserve(size_t(1) << m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    std::vector<bool> eps(m, false);
    Element point = z;
    unsigned ones = 0;
    for (size_t i = 0; i < m; ++i) {
      if (mask & (std::uint64_t(1) << i)) {
        eps[i] = true;
        point = add(point, xs[i]);
        ++ones;
      }
    }
    int sign = ((m - ones) % 2 == 0) ? 1 : -1;
    terms.push_back(SignedTerm{sign, std::move(eps), std::move(point)});
  }
  return terms;
}

namespace {

Verdict frechet_impl(const FunctionHandle& f, unsigned order, const Strategy& strategy,
                     bool shifted) {
  const size_t k = static_cast<size_t>(f.arity());
  const size_t groups = shifted ? 2 * order : order + 1;
  return scan_tuples(f.domain(), groups * k, strategy, [&](std::span<const Element> flat) {
    std::vector<ArgTuple> tuples(groups);
    for (size_t g = 0; g < groups; ++g)
      tuples[g] = ArgTuple(flat.begin() + g * k, flat.begin() + (g + 1) * k);
    ArgTuple base;
    std::span<const ArgTuple> hs;
    if (shifted) {
      base = tuples[0];
      for (size_t g = 1; g < order; ++g) base = add_tuples(base, tuples[g]);
      hs = std::span<const ArgTuple>(tuples).subspan(order, order);
    } else {
      base = tuples[0];
      hs = std::span<const ArgTuple>(tuples).subspan(1, order);
    }
    return is_zero(mixed_value_tuple(f, hs, base));
  });
}

}  // namespace

Verdict frechet_test(const FunctionHandle& f, unsigned order, const Strategy& strategy) {
  require_unary(f, "frechet_test");
  return frechet_impl(f, order, strategy, false);
}

Verdict frechet_shifted_test(const FunctionHandle& f, unsigned order, const Strategy& strategy) {
  require_unary(f, "frechet_shifted_test");
  if (order == 0) throw Error(ErrorKind::InvalidConfig, "shifted test needs order >= 1");
  return frechet_impl(f, order, strategy, true);
}

Verdict frechet_test_multi(const FunctionHandle& f, unsigned order, const Strategy& strategy) {
  return frechet_impl(f, order, strategy, false);
}

std::pair<Element, Element> leibniz_difference(const FunctionHandle& f, const FunctionHandle& g,
                                               const Element& x, const Element& h, unsigned m) {
  require_unary(f, "leibniz_difference");
  require_unary(g, "leibniz_difference");
  if (f.domain() != g.domain() || f.codomain() != g.codomain())
    throw Error(ErrorKind::DescriptorMismatch, "leibniz operands must share domain and codomain");
  const CarrierKind ck = f.codomain().kind();
  if (f.codomain().rank() != 1 ||
      (ck != CarrierKind::Rationals && ck != CarrierKind::CyclicProduct &&
       ck != CarrierKind::FreeAbelian))
    throw Error(ErrorKind::NonRingCodomain, f.codomain().describe());

  FunctionHandle fc = f, gc = g;
  FunctionHandle product = FunctionHandle::derived(
      f.domain(), 1, f.codomain(), "(" + f.label() + ")*(" + g.label() + ")",
      [fc, gc](std::span<const Element> args) { return mul(fc(args), gc(args)); });

  Element left = iterated_difference_value(product, h, m, x);

  Element right = zero(f.codomain());
  Element shifted_base = x;  // x + i*h as i advances
  for (unsigned i = 0; i <= m; ++i) {
    Element term = mul(iterated_difference_value(f, h, i, x),
                       iterated_difference_value(g, h, m - i, shifted_base));
    right = add(right, scale(binomial(m, i), term));
    if (i < m) shifted_base = add(shifted_base, h);
  }
  return {left, right};
}

}  // namespace gpoly
