#include "gpoly/sampling.hpp"

namespace gpoly {

Element sample_element(const CarrierDescriptor& d, Rng& rng, long box) {
  if (box < 1) throw Error(ErrorKind::InvalidConfig, "sampling box must be >= 1");
  std::vector<Rational> coords(d.rank());
  for (int i = 0; i < d.rank(); ++i) {
    switch (d.kind()) {
      case CarrierKind::FreeAbelian: {
        std::uniform_int_distribution<long> dist(-box, box);
        coords[i] = Rational(dist(rng));
        break;
      }
      case CarrierKind::Rationals: {
        std::uniform_int_distribution<long> num(-box, box);
        std::uniform_int_distribution<long> den(1, box);
        coords[i] = Rational(num(rng), den(rng));
        break;
      }
      case CarrierKind::PositiveRationals: {
        std::uniform_int_distribution<long> num(1, box);
        std::uniform_int_distribution<long> den(1, box);
        coords[i] = Rational(num(rng), den(rng));
        break;
      }
      case CarrierKind::NaturalsFromOne: {
        std::uniform_int_distribution<long> dist(1, box);
        coords[i] = Rational(dist(rng));
        break;
      }
      case CarrierKind::CyclicProduct: {
        // moduli fit in long at desk scale
        long n = d.moduli()[i].convert_to<long>();
        std::uniform_int_distribution<long> dist(0, n - 1);
        coords[i] = Rational(dist(rng));
        break;
      }
    }
  }
  return Element(d, std::move(coords));
}

Verdict scan_tuples(const CarrierDescriptor& d, size_t width, const Strategy& strategy,
                    const std::function<bool(std::span<const Element>)>& ok) {
  Verdict v;
  v.strategy = strategy;
  if (width == 0) {
    v.holds = ok({});
    v.checked = 1;
    if (!v.holds) v.counterexample = std::vector<Element>{};
    return v;
  }
  if (strategy.mode == Strategy::Mode::Exhaustive) {
    if (!d.finite()) throw Error(ErrorKind::InfiniteCarrier, d.describe());
    Int card = d.cardinality();
    Int total = 1;
    for (size_t i = 0; i < width; ++i) {
      total *= card;
      if (total > strategy.budget)
        throw Error(ErrorKind::BudgetExceeded,
                    "exhaustive scan of " + d.describe() + "^" + std::to_string(width) +
                        " exceeds tuple budget");
    }
    std::vector<Element> points = enumerate(d);
    std::vector<size_t> idx(width, 0);
    std::vector<Element> tuple;
    for (;;) {
      tuple.clear();
      for (size_t i : idx) tuple.push_back(points[i]);
      ++v.checked;
      if (!ok(tuple)) {
        v.holds = false;
        v.counterexample = tuple;
        return v;
      }
      int pos = static_cast<int>(width) - 1;
      while (pos >= 0) {
        if (++idx[pos] < points.size()) break;
        idx[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    return v;
  }
  Rng rng(strategy.seed);
  for (std::uint64_t i = 0; i < strategy.count; ++i) {
    std::vector<Element> tuple;
    tuple.reserve(width);
    for (size_t j = 0; j < width; ++j) tuple.push_back(sample_element(d, rng, strategy.box));
    ++v.checked;
    if (!ok(tuple)) {
      v.holds = false;
      v.counterexample = tuple;
      return v;
    }
  }
  return v;
}

Strategy default_strategy(const CarrierDescriptor& d, std::uint64_t seed) {
  if (d.finite()) return Strategy::exhaustive();
  return Strategy::sampled(seed);
}

}  // namespace gpoly
