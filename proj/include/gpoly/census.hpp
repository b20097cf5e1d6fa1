#pragma once

#include "gpoly/aichinger.hpp"

namespace gpoly {

/// Exhaustive comparison, over every f: S -> H, of the order-(m+1) vanishing
/// condition against verified constructed witnesses.
struct CensusReport {
  Int total_functions = 0;
  std::uint64_t frechet_count = 0;
  std::uint64_t witness_count = 0;
  bool buckets_coincide = true;
  /// Value tables (indices into enumerate(H), keyed by enumerate(S) order)
  /// of the functions passing the vanishing condition.
  std::vector<std::vector<size_t>> frechet_tables;
  std::optional<std::vector<size_t>> first_mismatch;  // a table in one bucket only
};

CensusReport equiv_scan(const CarrierDescriptor& S, const CarrierDescriptor& H, unsigned m,
                        Int budget = Int(100000));

}  // namespace gpoly
