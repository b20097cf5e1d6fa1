#include "gpoly/census.hpp"

namespace gpoly {

CensusReport equiv_scan(const CarrierDescriptor& S, const CarrierDescriptor& H, unsigned m,
                        Int budget) {
  if (!S.finite() || !H.finite())
    throw Error(ErrorKind::InfiniteCarrier, "census needs finite carriers");
  const std::vector<Element> points = enumerate(S);
  const std::vector<Element> values = enumerate(H);
  Int total = 1;
  for (size_t i = 0; i < points.size(); ++i) {
    total *= Int(values.size());
    if (total > budget)
      throw Error(ErrorKind::BudgetExceeded,
                  "|H|^|S| exceeds the census budget; raise --budget to proceed");
  }

  CensusReport report;
  report.total_functions = total;
  Element z = zero(S);
  Strategy full = Strategy::exhaustive();
  VerifyOptions no_precheck;
  no_precheck.budget = 0;

  std::vector<size_t> table(points.size(), 0);
  for (;;) {
    FunctionHandle::TableMap map;
    for (size_t i = 0; i < points.size(); ++i)
      map.insert_or_assign(flatten_args(std::span<const Element>(&points[i], 1)),
                           values[table[i]]);
    FunctionHandle f = FunctionHandle::from_table(S, 1, H, std::move(map), "census");

    bool in_frechet = frechet_test(f, m + 1, full).holds;
    AichingerWitness w = construct_witnesses(f, m, z, no_precheck);
    bool in_witness = verify(f, w, full).holds;

    if (in_frechet) {
      ++report.frechet_count;
      report.frechet_tables.push_back(table);
    }
    if (in_witness) ++report.witness_count;
    if (in_frechet != in_witness && report.buckets_coincide) {
      report.buckets_coincide = false;
      report.first_mismatch = table;
    }

    int pos = static_cast<int>(points.size()) - 1;
    while (pos >= 0) {
      if (++table[pos] < values.size()) break;
      table[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return report;
}

}  // namespace gpoly
