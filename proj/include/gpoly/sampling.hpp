#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "gpoly/carrier.hpp"

namespace gpoly {

/// How a "for all" quantifier is discharged: full enumeration on finite
/// carriers, seeded box sampling elsewhere.
struct Strategy {
  enum class Mode { Exhaustive, Sampled };

  Mode mode = Mode::Sampled;
  std::uint64_t seed = 1;
  std::uint64_t count = 1000;
  long box = 10;
  std::uint64_t budget = 5000000;

  static Strategy exhaustive(std::uint64_t budget = 5000000) {
    Strategy s;
    s.mode = Mode::Exhaustive;
    s.budget = budget;
    return s;
  }
  static Strategy sampled(std::uint64_t seed, std::uint64_t count = 1000, long box = 10) {
    Strategy s;
    s.mode = Mode::Sampled;
    s.seed = seed;
    s.count = count;
    s.box = box;
    return s;
  }
};

struct Verdict {
  bool holds = true;
  std::optional<std::vector<Element>> counterexample;
  Strategy strategy;
  std::uint64_t checked = 0;
};

using Rng = std::mt19937_64;

/// Seeded draw from the carrier's bounded box.
Element sample_element(const CarrierDescriptor& d, Rng& rng, long box);

/// Run `ok` over tuples in S^width in canonical order (exhaustive) or from
/// seeded draws (sampled). Stops at the first violating tuple.
Verdict scan_tuples(const CarrierDescriptor& d, size_t width, const Strategy& strategy,
                    const std::function<bool(std::span<const Element>)>& ok);

/// Pick a sensible default strategy for the carrier: exhaustive when finite.
Strategy default_strategy(const CarrierDescriptor& d, std::uint64_t seed);

}  // namespace gpoly
