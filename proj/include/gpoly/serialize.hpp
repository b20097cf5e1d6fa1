#pragma once

#include <json.hpp>

#include "gpoly/aichinger.hpp"
#include "gpoly/degrees.hpp"
#include "gpoly/extension.hpp"

namespace gpoly {

using Json = nlohmann::ordered_json;

Json carrier_to_json(const CarrierDescriptor& d);
CarrierDescriptor carrier_from_json(const Json& j);

Json element_to_json(const Element& e);  // coords as exact strings
Element element_from_json(const CarrierDescriptor& d, const Json& j);
Element element_from_text(const CarrierDescriptor& d, const std::string& text);  // "1/2,3"

Json strategy_to_json(const Strategy& s);
Json verdict_to_json(const Verdict& v);
Json degree_report_to_json(const DegreeReport& r);

Json witness_to_json(const AichingerWitness& w);
/// Rebuild witness evaluators for f from serialized signed term lists.
AichingerWitness witness_from_json(const FunctionHandle& f, const Json& j);

Json decomposition_to_json(const Decomposition& d);

Json difference_to_json(const FormalDifference& d);

/// Table files: JSON lines, each {"in": [[coords...],...], "out": [coords...]}.
FunctionHandle table_from_jsonl(const std::string& path, const CarrierDescriptor& domain,
                                int arity, const CarrierDescriptor& codomain);

}  // namespace gpoly
