#include "gpoly/canonical.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace gpoly {

MultiAdditiveMap::MultiAdditiveMap(int arity, FunctionHandle evaluator, bool symmetric)
    : arity_(arity), evaluator_(std::move(evaluator)), symmetric_(symmetric) {
  if (arity_ < 0) throw Error(ErrorKind::ArityMismatch, "negative arity");
  if (evaluator_.arity() != arity_)
    throw Error(ErrorKind::ArityMismatch, "evaluator arity != map arity");
}

Element MultiAdditiveMap::constant_value() const {
  if (arity_ != 0) throw Error(ErrorKind::ArityMismatch, "constant_value needs arity 0");
  return evaluator_({});
}

FunctionHandle diagonalize(const MultiAdditiveMap& A) {
  if (A.arity() < 1) throw Error(ErrorKind::ArityMismatch, "diagonalize needs arity >= 1");
  const int p = A.domain().rank();
  if (const PolyExpression* e = A.evaluator().expression()) {
    // slot (j, c) collapses to coordinate c of the single argument
    std::vector<PolyExpression> images;
    images.reserve(e->nvars());
    for (int j = 0; j < A.arity(); ++j)
      for (int c = 0; c < p; ++c) images.push_back(PolyExpression::variable(p, c));
    return FunctionHandle::from_expression(e->substitute(images), A.domain(), 1, A.codomain(),
                                           "diag(" + A.evaluator().label() + ")");
  }
  FunctionHandle ev = A.evaluator();
  int k = A.arity();
  return FunctionHandle::derived(A.domain(), 1, A.codomain(), "diag(" + ev.label() + ")",
                                 [ev, k](std::span<const Element> args) {
                                   std::vector<Element> rep(k, args[0]);
                                   return ev(rep);
                                 });
}

MultiAdditiveMap symmetrize(const MultiAdditiveMap& A) {
  const unsigned k = static_cast<unsigned>(A.arity());
  if (k <= 1) return MultiAdditiveMap(A.arity(), A.evaluator(), true);
  if (!factorial_bijective(A.codomain(), k))
    throw Error(ErrorKind::DivisibilityUnavailable,
                "symmetrization needs division by " + std::to_string(k) + "! on " +
                    A.codomain().describe());
  const int p = A.domain().rank();
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  if (const PolyExpression* e = A.evaluator().expression()) {
    PolyExpression total(e->nvars());
    do {
      std::vector<PolyExpression> images(e->nvars(), PolyExpression(e->nvars()));
      for (unsigned j = 0; j < k; ++j)
        for (int c = 0; c < p; ++c)
          images[j * p + c] = PolyExpression::variable(e->nvars(), perm[j] * p + c);
      total = total + e->substitute(images);
    } while (std::next_permutation(perm.begin(), perm.end()));
    total = total * PolyExpression::constant(e->nvars(), Rational(1, factorial(k)));
    return MultiAdditiveMap(
        A.arity(),
        FunctionHandle::from_expression(std::move(total), A.domain(), A.arity(), A.codomain(),
                                        "sym(" + A.evaluator().label() + ")"),
        true);
  }
  FunctionHandle ev = A.evaluator();
  FunctionHandle sym = FunctionHandle::derived(
      A.domain(), A.arity(), A.codomain(), "sym(" + ev.label() + ")",
      [ev, k](std::span<const Element> args) {
        std::vector<int> sigma(k);
        std::iota(sigma.begin(), sigma.end(), 0);
        Element acc = zero(ev.codomain());
        do {
          std::vector<Element> permuted;
          permuted.reserve(k);
          for (unsigned j = 0; j < k; ++j) permuted.push_back(args[sigma[j]]);
          acc = add(acc, ev(permuted));
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        return divide_by_factorial(acc, k);
      });
  return MultiAdditiveMap(A.arity(), std::move(sym), true);
}

namespace {

void certify_polarization(const FunctionHandle& f, const MultiAdditiveMap& A, unsigned m,
                          const Element& z, const VerifyOptions& opts) {
  if (m == 0) return;
  Rng rng(opts.seed);
  const CarrierDescriptor& d = f.domain();
  auto draw = [&] { return sample_element(d, rng, opts.box); };
  for (unsigned probe = 0; probe < opts.budget; ++probe) {
    // slot additivity
    std::vector<Element> tuple;
    for (unsigned j = 0; j < m; ++j) tuple.push_back(draw());
    unsigned slot = m == 1 ? 0 : static_cast<unsigned>(rng() % m);
    Element a = draw(), b = draw();
    std::vector<Element> at_sum = tuple, at_a = tuple, at_b = tuple;
    at_sum[slot] = add(a, b);
    at_a[slot] = a;
    at_b[slot] = b;
    if (A(at_sum) != add(A(at_a), A(at_b)))
      throw Error(ErrorKind::NotPolynomial,
                  "polarization of '" + f.label() + "' is not additive in slot " +
                      std::to_string(slot + 1));
    // basepoint independence of the underlying mixed difference
    Element z2 = draw();
    if (mixed_difference_value(f, tuple, z) != mixed_difference_value(f, tuple, z2))
      throw Error(ErrorKind::NotPolynomial,
                  "mixed difference of '" + f.label() + "' depends on the basepoint");
  }
}

}  // namespace

MultiAdditiveMap polarize(const FunctionHandle& f, unsigned m, const Element& z,
                          const VerifyOptions& opts) {
  if (f.arity() != 1) throw Error(ErrorKind::ArityMismatch, "polarize needs an arity-1 function");
  if (z.descriptor() != f.domain())
    throw Error(ErrorKind::DescriptorMismatch, "basepoint not in the function's domain");
  if (m == 0) {
    Element value = f(z);
    if (f.expression()) {
      PolyExpression c = PolyExpression::constant(0, value.coords()[0]);
      return MultiAdditiveMap(
          0, FunctionHandle::from_expression(std::move(c), f.domain(), 0, f.codomain()), true);
    }
    return MultiAdditiveMap(0, FunctionHandle::constant(f.domain(), 0, value), true);
  }
  if (!factorial_bijective(f.codomain(), m))
    throw Error(ErrorKind::DivisibilityUnavailable,
                "multiplication by " + std::to_string(m) + "! is not bijective on " +
                    f.codomain().describe());
  const int p = f.domain().rank();
  FunctionHandle evaluator = [&]() {
    if (const PolyExpression* e = f.expression()) {
      const int nvars = static_cast<int>(m) * p;
      PolyExpression total(nvars);
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        std::vector<PolyExpression> images;
        images.reserve(p);
        unsigned ones = 0;
        for (int c = 0; c < p; ++c) {
          PolyExpression img = PolyExpression::constant(nvars, z.coords()[c]);
          for (unsigned j = 0; j < m; ++j) {
            if (mask & (std::uint64_t(1) << j)) img = img + PolyExpression::variable(nvars, j * p + c);
          }
          images.push_back(std::move(img));
        }
        for (unsigned j = 0; j < m; ++j)
          if (mask & (std::uint64_t(1) << j)) ++ones;
        PolyExpression term = e->substitute(images);
        if ((m - ones) % 2 == 0)
          total = total + term;
        else
          total = total - term;
      }
      total = total * PolyExpression::constant(nvars, Rational(1, factorial(m)));
      return FunctionHandle::from_expression(std::move(total), f.domain(),
                                             static_cast<int>(m), f.codomain(),
                                             "polar" + std::to_string(m) + "(" + f.label() + ")");
    }
    // lazy signed-expansion evaluator with a memo table
    struct Memo {
      std::mutex mutex;
      std::map<std::vector<Rational>, Element> cache;
    };
    auto memo = std::make_shared<Memo>();
    FunctionHandle fc = f;
    Element base = z;
    unsigned order = m;
    return FunctionHandle::derived(
        f.domain(), static_cast<int>(m), f.codomain(),
        "polar" + std::to_string(m) + "(" + f.label() + ")",
        [fc, base, order, memo](std::span<const Element> args) {
          std::vector<Rational> key = flatten_args(args);
          {
            std::lock_guard<std::mutex> lock(memo->mutex);
            auto it = memo->cache.find(key);
            if (it != memo->cache.end()) return it->second;
          }
          Element value =
              divide_by_factorial(mixed_difference_value(fc, args, base), order);
          std::lock_guard<std::mutex> lock(memo->mutex);
          return memo->cache.emplace(std::move(key), std::move(value)).first->second;
        });
  }();
  MultiAdditiveMap A(static_cast<int>(m), std::move(evaluator), true);
  certify_polarization(f, A, m, z, opts);
  return A;
}

Decomposition decompose(const FunctionHandle& f, unsigned m, const Element& z,
                        const VerifyOptions& opts) {
  if (f.arity() != 1) throw Error(ErrorKind::ArityMismatch, "decompose needs an arity-1 function");
  std::vector<MultiAdditiveMap> components;
  components.reserve(m + 1);
  FunctionHandle residual = f;
  for (unsigned k = m; k >= 1; --k) {
    MultiAdditiveMap Ak = polarize(residual, k, z, opts);
    components.push_back(Ak);
    residual = pointwise_combine(residual, diagonalize(Ak), '-');
  }
  // what is left must be constant
  Element a0 = residual(z);
  Rng rng(opts.seed + 1);
  for (unsigned probe = 0; probe < opts.budget; ++probe) {
    Element x = sample_element(f.domain(), rng, opts.box);
    if (residual(x) != a0)
      throw Error(ErrorKind::NotPolynomial,
                  "'" + f.label() + "' has degree above " + std::to_string(m));
  }
  MultiAdditiveMap A0 =
      residual.expression()
          ? MultiAdditiveMap(0,
                             FunctionHandle::from_expression(
                                 PolyExpression::constant(0, a0.coords()[0]), f.domain(), 0,
                                 f.codomain()),
                             true)
          : MultiAdditiveMap(0, FunctionHandle::constant(f.domain(), 0, a0), true);
  components.push_back(A0);
  std::reverse(components.begin(), components.end());
  return Decomposition{std::move(components), z};
}

Decomposition decompose(const FunctionHandle& f, unsigned m, const VerifyOptions& opts) {
  return decompose(f, m, default_basepoint(f.domain()), opts);
}

FunctionHandle recompose(const Decomposition& d) {
  const MultiAdditiveMap& A0 = d.components.front();
  const CarrierDescriptor& domain = A0.domain();
  const CarrierDescriptor& codomain = A0.codomain();
  bool symbolic = true;
  for (const MultiAdditiveMap& A : d.components)
    if (!A.evaluator().expression()) symbolic = false;
  if (symbolic) {
    const int p = domain.rank();
    PolyExpression total = PolyExpression::constant(p, A0.constant_value().coords()[0]);
    for (size_t k = 1; k < d.components.size(); ++k)
      total = total + *diagonalize(d.components[k]).expression();
    return FunctionHandle::from_expression(std::move(total), domain, 1, codomain, "recompose");
  }
  Element a0 = A0.constant_value();
  std::vector<FunctionHandle> diags;
  for (size_t k = 1; k < d.components.size(); ++k) diags.push_back(diagonalize(d.components[k]));
  return FunctionHandle::derived(domain, 1, codomain, "recompose",
                                 [a0, diags](std::span<const Element> args) {
                                   Element acc = a0;
                                   for (const FunctionHandle& g : diags) acc = add(acc, g(args));
                                   return acc;
                                 });
}

Verdict is_multiadditive(const MultiAdditiveMap& A, const Strategy& strategy) {
  const int k = A.arity();
  Verdict merged;
  merged.strategy = strategy;
  if (k == 0) return merged;
  for (int slot = 0; slot < k; ++slot) {
    // k-1 filler slots, then the two summands for the probed slot
    Verdict v = scan_tuples(A.domain(), static_cast<size_t>(k) + 1, strategy,
                            [&](std::span<const Element> flat) {
                              std::vector<Element> at_sum, at_a, at_b;
                              size_t fill = 0;
                              for (int j = 0; j < k; ++j) {
                                if (j == slot) {
                                  at_sum.push_back(add(flat[k - 1], flat[k]));
                                  at_a.push_back(flat[k - 1]);
                                  at_b.push_back(flat[k]);
                                } else {
                                  at_sum.push_back(flat[fill]);
                                  at_a.push_back(flat[fill]);
                                  at_b.push_back(flat[fill]);
                                  ++fill;
                                }
                              }
                              return A(at_sum) == add(A(at_a), A(at_b));
                            });
    merged.checked += v.checked;
    if (!v.holds) {
      merged.holds = false;
      merged.counterexample = v.counterexample;
      return merged;
    }
  }
  return merged;
}

Verdict is_symmetric(const MultiAdditiveMap& A, const Strategy& strategy) {
  const unsigned k = static_cast<unsigned>(A.arity());
  Verdict trivial;
  trivial.strategy = strategy;
  if (k <= 1) return trivial;
  return scan_tuples(A.domain(), k, strategy, [&](std::span<const Element> args) {
    Element reference = A(args);
    std::vector<int> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      std::vector<Element> permuted;
      permuted.reserve(k);
      for (unsigned j = 0; j < k; ++j) permuted.push_back(args[sigma[j]]);
      if (A(permuted) != reference) return false;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return true;
  });
}

Verdict is_monomial(const FunctionHandle& f, unsigned n, const Strategy& strategy) {
  if (f.arity() != 1) throw Error(ErrorKind::ArityMismatch, "is_monomial needs arity 1");
  if (n > 0 && !factorial_bijective(f.codomain(), n))
    throw Error(ErrorKind::DivisibilityUnavailable,
                "division by " + std::to_string(n) + "! unavailable on " +
                    f.codomain().describe());
  return scan_tuples(f.domain(), 2, strategy, [&](std::span<const Element> xs) {
    Element lhs = divide_by_factorial(iterated_difference_value(f, xs[1], n, xs[0]), n);
    return lhs == f(xs[1]);
  });
}

}  // namespace gpoly
