// gpoly: batch verification front-end.
//
// Every subcommand prints one JSON report (stdout or --out). Exit codes:
//   0  all verdicts hold
//   1  some verdict fails
//   2  operational error (bad config, IO, unsatisfied precondition)

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "gpoly/census.hpp"
#include "gpoly/degrees.hpp"
#include "gpoly/extension.hpp"
#include "gpoly/serialize.hpp"

namespace {

using namespace gpoly;

constexpr int kSchemaVersion = 1;

struct CarrierOpts {
  std::string kind = "rationals";
  int rank = 1;
  std::vector<long long> moduli;

  CarrierDescriptor build() const {
    if (kind == "cyclic") {
      if (moduli.empty())
        throw Error(ErrorKind::InvalidConfig, "cyclic carrier needs --moduli");
      std::vector<Int> ms(moduli.begin(), moduli.end());
      return CarrierDescriptor::cyclic(std::move(ms));
    }
    Json j;
    j["kind"] = kind;
    j["rank"] = rank;
    return carrier_from_json(j);
  }
};

struct StrategyOpts {
  bool exhaustive = false;
  std::uint64_t samples = 1000;
  std::int64_t seed = -1;  // negative: unset
  long box = 10;
  std::uint64_t budget = 5000000;

  Strategy build(const CarrierDescriptor& domain) const {
    if (exhaustive || (domain.finite() && seed < 0))
      return Strategy::exhaustive(budget);
    // no implicit entropy: unset seeds fall back to 1 and are echoed in the report
    return Strategy::sampled(seed < 0 ? 1 : static_cast<std::uint64_t>(seed), samples, box);
  }
};

struct CommonOpts {
  CarrierOpts domain;
  CarrierOpts codomain;
  const CLI::Option* codomain_kind_opt = nullptr;
  const CLI::Option* codomain_moduli_opt = nullptr;
  StrategyOpts strategy;
  std::string expr;
  std::string table_path;
  int arity = 1;
  std::string out;
  std::string job_path;

  CarrierDescriptor domain_carrier() const { return domain.build(); }
  // default codomain: the domain's enveloping group (values need a group)
  CarrierDescriptor codomain_carrier() const {
    bool set = codomain_kind_opt->count() > 0 || codomain_moduli_opt->count() > 0;
    if (!set) return difference_group_carrier(domain.build());
    CarrierOpts c = codomain;
    if (codomain_kind_opt->count() == 0) c.kind = "cyclic";
    return c.build();
  }

  FunctionHandle load_function() const {
    CarrierDescriptor d = domain_carrier();
    CarrierDescriptor h = codomain_carrier();
    if (!table_path.empty()) return table_from_jsonl(table_path, d, arity, h);
    if (expr.empty()) throw Error(ErrorKind::InvalidConfig, "need --f or --table");
    return parse_expression(expr, d, arity, h);
  }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_function = true) {
  cmd->add_option("--carrier", o.domain.kind,
                  "domain kind: rationals | free-abelian | positive-rationals | "
                  "naturals-from-one | cyclic");
  cmd->add_option("--rank", o.domain.rank, "domain rank");
  cmd->add_option("--moduli", o.domain.moduli, "cyclic moduli, e.g. --moduli 5 7")
      ->delimiter(',');
  o.codomain_kind_opt =
      cmd->add_option("--codomain", o.codomain.kind, "codomain kind (default: domain's group)");
  cmd->add_option("--codomain-rank", o.codomain.rank, "codomain rank");
  o.codomain_moduli_opt =
      cmd->add_option("--codomain-moduli", o.codomain.moduli, "codomain cyclic moduli")
          ->delimiter(',');
  if (with_function) {
    cmd->add_option("--f", o.expr, "function as an expression, e.g. \"x^2+3*x\"");
    cmd->add_option("--table", o.table_path, "function as a JSON-lines table file");
    cmd->add_option("--arity", o.arity, "argument count for --f / --table");
  }
  cmd->add_flag("--exhaustive", o.strategy.exhaustive, "enumerate all tuples (finite carriers)");
  cmd->add_option("--samples", o.strategy.samples, "sampled tuple count");
  cmd->add_option("--seed", o.strategy.seed, "RNG seed for sampled runs (default 1)");
  cmd->add_option("--box", o.strategy.box, "sampling box bound");
  cmd->add_option("--budget", o.strategy.budget, "exhaustive tuple budget");
  cmd->add_option("--out", o.out, "write the report here instead of stdout");
  cmd->add_option("--job", o.job_path, "JSON job file; flags given on the command line win");
}

// Job files mirror the long flag names without the leading dashes:
// {"carrier": "cyclic", "moduli": [5], "f": "x^2", "order": 3, ...}
void apply_job(CLI::App* cmd, const std::string& path) {
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidConfig, "cannot open job file '" + path + "'");
  Json job = Json::parse(in);
  for (auto it = job.begin(); it != job.end(); ++it) {
    CLI::Option* opt = cmd->get_option_no_throw("--" + it.key());
    if (!opt) throw Error(ErrorKind::InvalidConfig, "unknown job key '" + it.key() + "'");
    if (opt->count() > 0) continue;  // explicit flags win
    if (it.value().is_boolean()) {
      if (it.value().get<bool>()) opt->add_result("true");
    } else if (it.value().is_array()) {
      for (const auto& v : it.value()) opt->add_result(v.dump());
    } else {
      opt->add_result(it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
    }
    opt->run_callback();
  }
}

void emit(const Json& report, const std::string& out) {
  std::string text = report.dump(2);
  text.push_back('\n');
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::string tmp = out + ".tmp";
  {
    std::ofstream os(tmp, std::ios::trunc);
    if (!os) throw Error(ErrorKind::InvalidConfig, "cannot write '" + tmp + "'");
    os << text;
  }
  if (std::rename(tmp.c_str(), out.c_str()) != 0)
    throw Error(ErrorKind::InvalidConfig, "cannot move report into '" + out + "'");
}

Json base_report(const std::string& command, const CommonOpts& o) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  Json cfg;
  cfg["carrier"] = carrier_to_json(o.domain_carrier());
  cfg["codomain"] = carrier_to_json(o.codomain_carrier());
  if (!o.expr.empty()) cfg["f"] = o.expr;
  if (!o.table_path.empty()) cfg["table"] = o.table_path;
  cfg["arity"] = o.arity;
  j["config"] = cfg;
  return j;
}

int finish(Json report, const CommonOpts& o, bool holds) {
  report["holds"] = holds;
  emit(report, o.out);
  return holds ? 0 : 1;
}

Element parse_point(const CarrierDescriptor& d, const std::string& text) {
  return element_from_text(d, text);
}

int run_check_frechet(CommonOpts& o, unsigned order, bool shifted) {
  FunctionHandle f = o.load_function();
  Strategy st = o.strategy.build(f.domain());
  Verdict v = shifted ? frechet_shifted_test(f, order, st) : frechet_test(f, order, st);
  Json report = base_report(shifted ? "check-frechet --shifted" : "check-frechet", o);
  report["config"]["order"] = order;
  report["verdict"] = verdict_to_json(v);
  return finish(std::move(report), o, v.holds);
}

int run_witness(CommonOpts& o, unsigned m, const std::string& at, unsigned precheck) {
  FunctionHandle f = o.load_function();
  VerifyOptions opts;
  opts.budget = precheck;
  if (o.strategy.seed >= 0) opts.seed = static_cast<std::uint64_t>(o.strategy.seed);
  AichingerWitness w = at.empty() ? construct_witnesses(f, m, opts)
                                  : construct_witnesses(f, m, parse_point(f.domain(), at), opts);
  Verdict v = verify(f, w, o.strategy.build(f.domain()));
  Json report = base_report("witness", o);
  report["config"]["m"] = m;
  report["witness"] = witness_to_json(w);
  report["verdict"] = verdict_to_json(v);
  return finish(std::move(report), o, v.holds);
}

int run_check_aichinger(CommonOpts& o, const std::string& witness_path) {
  FunctionHandle f = o.load_function();
  std::ifstream in(witness_path);
  if (!in)
    throw Error(ErrorKind::InvalidConfig, "cannot open witness file '" + witness_path + "'");
  AichingerWitness w = witness_from_json(f, Json::parse(in));
  Verdict v = verify(f, w, o.strategy.build(f.domain()));
  Json report = base_report("check-aichinger", o);
  report["config"]["witness"] = witness_path;
  report["verdict"] = verdict_to_json(v);
  return finish(std::move(report), o, v.holds);
}

int run_peel(CommonOpts& o, unsigned m, const std::string& at, const std::string& step,
             unsigned times) {
  FunctionHandle f = o.load_function();
  Element h = parse_point(f.domain(), step);
  AichingerWitness w = at.empty() ? construct_witnesses(f, m)
                                  : construct_witnesses(f, m, parse_point(f.domain(), at));
  Strategy st = o.strategy.build(f.domain());
  Json report = base_report("peel", o);
  report["config"]["m"] = m;
  report["config"]["step"] = step;
  report["config"]["times"] = times;
  Json stages = Json::array();
  bool all_hold = verify(f, w, st).holds;
  for (unsigned i = 0; i < times && w.m >= 0; ++i) {
    auto [fd, wd] = peel(f, w, h);
    f = fd;
    w = wd;
    Verdict v = verify(f, w, st);
    Json stage;
    stage["m"] = w.m;
    stage["verdict"] = verdict_to_json(v);
    stages.push_back(stage);
    all_hold = all_hold && v.holds;
  }
  report["stages"] = stages;
  return finish(std::move(report), o, all_hold);
}

int run_decompose(CommonOpts& o, unsigned m, const std::string& at, bool check_recompose) {
  FunctionHandle f = o.load_function();
  Decomposition d = at.empty() ? decompose(f, m)
                               : decompose(f, m, parse_point(f.domain(), at));
  Json report = base_report(check_recompose ? "recompose" : "decompose", o);
  report["config"]["m"] = m;
  report["decomposition"] = decomposition_to_json(d);
  bool holds = true;
  FunctionHandle r = recompose(d);
  if (const PolyExpression* e = r.expression())
    report["recomposed"] = e->to_string(canonical_variable_names(1, f.domain().rank()));
  Strategy st = o.strategy.build(f.domain());
  Verdict v = scan_tuples(f.domain(), 1, st,
                          [&](std::span<const Element> xs) { return f(xs[0]) == r(xs[0]); });
  report["identity_verdict"] = verdict_to_json(v);
  holds = v.holds;
  return finish(std::move(report), o, holds);
}

int run_extend(CommonOpts& o, unsigned m, const std::string& at) {
  FunctionHandle f = o.load_function();
  ExtendedPolynomial F = extend_polynomial(f, m);
  CarrierDescriptor G = difference_group_carrier(f.domain());
  Json report = base_report("extend", o);
  report["config"]["m"] = m;
  report["group_carrier"] = carrier_to_json(G);
  if (!at.empty()) {
    Element p = parse_point(G, at);
    FormalDifference d = lift_to_difference(f.domain(), p);
    Element value = F.evaluate(d);
    report["config"]["at"] = at;
    report["value"] = element_to_json(value);
  }
  Strategy st = o.strategy.build(f.domain());
  Verdict v = scan_tuples(f.domain(), 1, st, [&](std::span<const Element> xs) {
    return F.evaluate(embed(xs[0])) == f(xs[0]);
  });
  report["restriction_verdict"] = verdict_to_json(v);
  return finish(std::move(report), o, v.holds);
}

int run_degree(CommonOpts& o, unsigned probe, std::optional<unsigned> claim) {
  FunctionHandle f = o.load_function();
  DegreeReport r = degree_of(f, probe, o.strategy.build(f.domain()), claim);
  Json report = base_report("degree", o);
  report["config"]["probe"] = probe;
  report["degree"] = degree_report_to_json(r);
  bool holds = r.measured_degree.has_value() && (!claim || *r.measured_degree <= *claim);
  return finish(std::move(report), o, holds);
}

int run_product_or_compose(CommonOpts& o, const std::string& other_expr, unsigned probe,
                           bool composition) {
  FunctionHandle f = o.load_function();
  CarrierDescriptor d = f.domain(), h = f.codomain();
  FunctionHandle g = parse_expression(other_expr, composition ? h : d, 1, composition ? h : h);
  FunctionHandle combined = composition ? compose(f, g) : product(f, g);
  DegreeReport r = degree_of(combined, probe, o.strategy.build(combined.domain()));
  Json report = base_report(composition ? "compose" : "product", o);
  report["config"][composition ? "inner" : "g"] = other_expr;
  report["config"]["probe"] = probe;
  if (const PolyExpression* e = combined.expression())
    report["result"] = e->to_string(canonical_variable_names(1, combined.domain().rank()));
  report["degree"] = degree_report_to_json(r);
  return finish(std::move(report), o, r.measured_degree.has_value());
}

int run_monomial_check(CommonOpts& o, const std::string& g_expr, unsigned n, unsigned m,
                       bool two_domain, const CarrierOpts& g_domain, bool g_domain_set) {
  FunctionHandle f = o.load_function();
  CarrierDescriptor gd = two_domain && g_domain_set ? g_domain.build() : f.domain();
  FunctionHandle g = parse_expression(g_expr, gd, 1, f.codomain());
  Strategy st = o.strategy.build(f.domain());
  Verdict v = two_domain ? two_domain_product_check(f, g, n, m, st)
                         : monomial_product_check(f, g, n, m, st);
  Json report = base_report(two_domain ? "monomial-check --two-domain" : "monomial-check", o);
  report["config"]["g"] = g_expr;
  report["config"]["n"] = n;
  report["config"]["m"] = m;
  report["verdict"] = verdict_to_json(v);
  return finish(std::move(report), o, v.holds);
}

int run_equiv_scan(CommonOpts& o, unsigned m, long long budget) {
  CarrierDescriptor S = o.domain_carrier();
  CarrierDescriptor H = o.codomain_carrier();
  CensusReport census = equiv_scan(S, H, m, Int(budget));
  Json report = base_report("equiv-scan", o);
  report["config"]["m"] = m;
  report["config"]["function_budget"] = budget;
  Json c;
  c["total_functions"] = census.total_functions.convert_to<long long>();
  c["vanishing_count"] = census.frechet_count;
  c["witnessed_count"] = census.witness_count;
  c["buckets_coincide"] = census.buckets_coincide;
  if (census.first_mismatch) c["first_mismatch_table"] = *census.first_mismatch;
  report["census"] = c;
  return finish(std::move(report), o, census.buckets_coincide);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact finite-difference calculus for generalized polynomials on "
               "commutative semigroups"};
  app.require_subcommand(1);

  struct Extra {
    unsigned order = 2, m = 2, n = 1, probe = 10, times = 1, precheck = 50;
    bool shifted = false, two_domain = false;
    std::string at, step = "1", witness, other;
    std::optional<unsigned> claim;
    CarrierOpts g_domain;
    bool g_domain_set = false;
  };

  std::vector<std::unique_ptr<CommonOpts>> opt_store;
  std::vector<std::unique_ptr<Extra>> extra_store;
  auto make = [&](const std::string& name, const std::string& desc, bool with_fn = true) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    opt_store.push_back(std::make_unique<CommonOpts>());
    extra_store.push_back(std::make_unique<Extra>());
    add_common(cmd, *opt_store.back(), with_fn);
    return std::tuple<CLI::App*, CommonOpts*, Extra*>{cmd, opt_store.back().get(),
                                                      extra_store.back().get()};
  };
  int rc = 0;
  auto run = [&rc](CLI::App* cmd, CommonOpts* o, std::function<int()> body) {
    cmd->final_callback([cmd, o, body, &rc] {
      apply_job(cmd, o->job_path);
      rc = body();
    });
  };

  {
    auto [cmd, o, e] = make("check-frechet", "test that order-m mixed differences vanish");
    cmd->add_option("--order", e->order, "difference order m");
    cmd->add_flag("--shifted", e->shifted, "evaluate at base point x1+...+xm");
    run(cmd, o, [o, e] { return run_check_frechet(*o, e->order, e->shifted); });
  }
  {
    auto [cmd, o, e] = make("witness", "construct and verify a sum-splitting certificate");
    cmd->add_option("--m", e->m, "degree bound (m+1 equation slots)");
    cmd->add_option("--at", e->at, "basepoint coordinates, e.g. \"0\" or \"1,1\"");
    cmd->add_option("--precheck", e->precheck, "vanishing precheck probe count (0 disables)");
    run(cmd, o, [o, e] { return run_witness(*o, e->m, e->at, e->precheck); });
  }
  {
    auto [cmd, o, e] = make("check-aichinger", "verify a serialized certificate against f");
    cmd->add_option("--witness", e->witness, "witness JSON produced by `witness`");
    run(cmd, o, [o, e] { return run_check_aichinger(*o, e->witness); });
  }
  {
    auto [cmd, o, e] = make("peel", "difference f and its certificate down one degree at a time");
    cmd->add_option("--m", e->m, "starting degree bound");
    cmd->add_option("--at", e->at, "basepoint coordinates");
    cmd->add_option("--step", e->step, "difference step coordinates");
    cmd->add_option("--times", e->times, "number of peels");
    run(cmd, o, [o, e] { return run_peel(*o, e->m, e->at, e->step, e->times); });
  }
  {
    auto [cmd, o, e] = make("decompose", "split f into symmetric multiadditive components");
    cmd->add_option("--m", e->m, "degree bound");
    cmd->add_option("--at", e->at, "basepoint coordinates");
    run(cmd, o, [o, e] { return run_decompose(*o, e->m, e->at, false); });
  }
  {
    auto [cmd, o, e] = make("recompose", "decompose f, rebuild it, and check the identity");
    cmd->add_option("--m", e->m, "degree bound");
    cmd->add_option("--at", e->at, "basepoint coordinates");
    run(cmd, o, [o, e] { return run_decompose(*o, e->m, e->at, true); });
  }
  {
    auto [cmd, o, e] = make("extend", "extend f to the group of differences of its domain");
    cmd->add_option("--m", e->m, "degree bound");
    cmd->add_option("--at", e->at, "group point to evaluate the extension at");
    run(cmd, o, [o, e] { return run_extend(*o, e->m, e->at); });
  }
  {
    auto [cmd, o, e] = make("degree", "probe the exact functional degree of f");
    cmd->add_option("--probe", e->probe, "largest degree to try");
    cmd->add_option("--claim", e->claim, "expected upper bound; failure exits 1");
    run(cmd, o, [o, e] { return run_degree(*o, e->probe, e->claim); });
  }
  {
    auto [cmd, o, e] = make("product", "pointwise product f*g and its measured degree");
    cmd->add_option("--g", e->other, "second factor expression");
    cmd->add_option("--probe", e->probe, "largest degree to try");
    run(cmd, o, [o, e] { return run_product_or_compose(*o, e->other, e->probe, false); });
  }
  {
    auto [cmd, o, e] = make("compose", "composition f(inner(x)) and its measured degree");
    cmd->add_option("--inner", e->other, "inner expression (on f's codomain)");
    cmd->add_option("--probe", e->probe, "largest degree to try");
    run(cmd, o, [o, e] { return run_product_or_compose(*o, e->other, e->probe, true); });
  }
  {
    auto [cmd, o, e] = make("monomial-check", "product-of-monomials difference identity");
    cmd->add_option("--g", e->other, "second factor expression");
    cmd->add_option("--n", e->n, "degree of f");
    cmd->add_option("--m", e->m, "degree of g");
    cmd->add_flag("--two-domain", e->two_domain, "factors live on separate domains");
    auto* gk = cmd->add_option("--g-carrier", e->g_domain.kind, "domain kind of g");
    cmd->add_option("--g-rank", e->g_domain.rank, "domain rank of g");
    cmd->add_option("--g-moduli", e->g_domain.moduli, "cyclic moduli of g's domain")
        ->delimiter(',');
    run(cmd, o, [o, e, gk] {
      e->g_domain_set = gk->count() > 0 || !e->g_domain.moduli.empty();
      return run_monomial_check(*o, e->other, e->n, e->m, e->two_domain, e->g_domain,
                                e->g_domain_set);
    });
  }
  {
    auto [cmd, o, e] = make("equiv-scan",
                            "enumerate all f: S -> H and compare the vanishing and "
                            "certificate buckets",
                            false);
    cmd->add_option("--m", e->m, "degree bound");
    static long long budget = 100000;
    cmd->add_option("--function-budget", budget, "largest |H|^|S| to enumerate");
    run(cmd, o, [o, e] { return run_equiv_scan(*o, e->m, budget); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
