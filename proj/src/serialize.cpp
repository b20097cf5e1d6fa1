#include "gpoly/serialize.hpp"

#include <fstream>
#include <sstream>

namespace gpoly {

Json carrier_to_json(const CarrierDescriptor& d) {
  Json j;
  j["kind"] = to_string(d.kind());
  if (d.kind() == CarrierKind::CyclicProduct) {
    Json moduli = Json::array();
    for (const Int& n : d.moduli()) moduli.push_back(n.convert_to<long long>());
    j["moduli"] = moduli;
  } else {
    j["rank"] = d.rank();
  }
  return j;
}

CarrierDescriptor carrier_from_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "cyclic") {
    std::vector<Int> moduli;
    for (const auto& n : j.at("moduli")) moduli.emplace_back(n.get<long long>());
    return CarrierDescriptor::cyclic(std::move(moduli));
  }
  int rank = j.value("rank", 1);
  if (kind == "free-abelian") return CarrierDescriptor::free_abelian(rank);
  if (kind == "rationals") return CarrierDescriptor::rationals(rank);
  if (kind == "positive-rationals") return CarrierDescriptor::positive_rationals(rank);
  if (kind == "naturals-from-one") return CarrierDescriptor::naturals_from_one(rank);
  throw Error(ErrorKind::InvalidConfig, "unknown carrier kind '" + kind + "'");
}

Json element_to_json(const Element& e) {
  Json coords = Json::array();
  for (const Rational& c : e.coords()) coords.push_back(to_string(c));
  return coords;
}

Element element_from_json(const CarrierDescriptor& d, const Json& j) {
  std::vector<Rational> coords;
  for (const auto& c : j) {
    if (c.is_number_integer())
      coords.emplace_back(c.get<long long>());
    else
      coords.push_back(rational_from_string(c.get<std::string>()));
  }
  return Element(d, std::move(coords));
}

Element element_from_text(const CarrierDescriptor& d, const std::string& text) {
  std::vector<Rational> coords;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) coords.push_back(rational_from_string(piece));
  return Element(d, std::move(coords));
}

Json strategy_to_json(const Strategy& s) {
  Json j;
  if (s.mode == Strategy::Mode::Exhaustive) {
    j["mode"] = "exhaustive";
    j["budget"] = s.budget;
  } else {
    j["mode"] = "sampled";
    j["count"] = s.count;
    j["seed"] = s.seed;
    j["box"] = s.box;
  }
  return j;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["holds"] = v.holds;
  j["checked"] = v.checked;
  j["strategy"] = strategy_to_json(v.strategy);
  if (v.counterexample) {
    Json tuple = Json::array();
    for (const Element& e : *v.counterexample) tuple.push_back(element_to_json(e));
    j["counterexample"] = tuple;
  }
  return j;
}

Json degree_report_to_json(const DegreeReport& r) {
  Json j;
  if (r.claimed_bound)
    j["claimed_bound"] = *r.claimed_bound;
  if (r.measured_degree)
    j["measured_degree"] = *r.measured_degree;
  else
    j["measured_degree"] = "exceeds probe limit";
  j["verdict_above"] = verdict_to_json(r.verdict_above);
  if (r.verdict_at_degree) j["verdict_at_degree"] = verdict_to_json(*r.verdict_at_degree);
  return j;
}

Json witness_to_json(const AichingerWitness& w) {
  Json j;
  j["m"] = w.m;
  j["basepoint"] = element_to_json(w.basepoint);
  j["translated"] = w.translated;
  Json gs = Json::array();
  for (size_t i = 0; i < w.gs.size(); ++i) {
    Json g;
    g["omits"] = i + 1;
    if (i < w.terms.size()) {
      Json terms = Json::array();
      for (const WitnessTerm& t : w.terms[i]) {
        Json term;
        term["sign"] = t.sign;
        Json eps = Json::array();
        for (bool b : t.eps) eps.push_back(b ? 1 : 0);
        term["eps"] = eps;
        terms.push_back(term);
      }
      g["terms"] = terms;
    } else {
      g["terms"] = "opaque";
    }
    gs.push_back(g);
  }
  j["gs"] = gs;
  return j;
}

AichingerWitness witness_from_json(const FunctionHandle& f, const Json& j) {
  int m = j.at("m").get<int>();
  Element basepoint = element_from_json(f.domain(), j.at("basepoint"));
  bool translated = j.at("translated").get<bool>();
  std::vector<std::vector<WitnessTerm>> groups;
  for (const auto& g : j.at("gs")) {
    std::vector<WitnessTerm> terms;
    if (!g.at("terms").is_array())
      throw Error(ErrorKind::InvalidConfig, "witness file has opaque terms; cannot rebuild");
    for (const auto& t : g.at("terms")) {
      WitnessTerm term;
      term.sign = t.at("sign").get<int>();
      for (const auto& e : t.at("eps")) term.eps.push_back(e.get<int>() != 0);
      terms.push_back(std::move(term));
    }
    groups.push_back(std::move(terms));
  }
  if (static_cast<int>(groups.size()) != m + 1)
    throw Error(ErrorKind::InvalidConfig, "witness file must carry m+1 functions");
  AichingerWitness w{m, {}, basepoint, translated, groups};
  const size_t slots = static_cast<size_t>(m) + 1;
  for (size_t i = 0; i < slots; ++i) {
    FunctionHandle fc = f;
    Element base = basepoint;
    std::vector<WitnessTerm> terms = groups[i];
    size_t omit = i;
    w.gs.push_back(FunctionHandle::derived(
        f.domain(), m, f.codomain(), "g" + std::to_string(i + 1),
        [fc, base, terms, omit, slots](std::span<const Element> args) {
          Element acc = zero(fc.codomain());
          for (const WitnessTerm& t : terms) {
            Element point = base;
            size_t argpos = 0;
            for (size_t j2 = 0; j2 < slots; ++j2) {
              if (j2 == omit) continue;
              if (t.eps[j2]) point = add(point, args[argpos]);
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

Json decomposition_to_json(const Decomposition& d) {
  Json j;
  j["basepoint"] = element_to_json(d.basepoint);
  Json comps = Json::array();
  for (const MultiAdditiveMap& A : d.components) {
    Json c;
    c["arity"] = A.arity();
    if (A.arity() == 0) {
      c["constant"] = element_to_json(A.constant_value());
    } else if (const PolyExpression* e = A.evaluator().expression()) {
      c["expression"] =
          e->to_string(canonical_variable_names(A.arity(), A.domain().rank()));
    } else {
      c["expression"] = nullptr;  // lazy evaluator without a closed form
    }
    comps.push_back(c);
  }
  j["components"] = comps;
  return j;
}

Json difference_to_json(const FormalDifference& d) {
  Json j;
  j["plus"] = element_to_json(d.plus);
  j["minus"] = element_to_json(d.minus);
  return j;
}

FunctionHandle table_from_jsonl(const std::string& path, const CarrierDescriptor& domain,
                                int arity, const CarrierDescriptor& codomain) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidConfig, "cannot open table file '" + path + "'");
  FunctionHandle::TableMap table;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    Json j = Json::parse(line);
    std::vector<Element> args;
    for (const auto& a : j.at("in")) args.push_back(element_from_json(domain, a));
    if (static_cast<int>(args.size()) != arity)
      throw Error(ErrorKind::ArityMismatch, "table row arity mismatch in '" + path + "'");
    Element out = element_from_json(codomain, j.at("out"));
    table.insert_or_assign(flatten_args(args), out);
  }
  return FunctionHandle::from_table(domain, arity, codomain, std::move(table), "table:" + path);
}

}  // namespace gpoly
