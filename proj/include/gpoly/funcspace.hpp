#pragma once

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gpoly/carrier.hpp"

namespace gpoly {

/// Multivariate polynomial with exact rational coefficients, canonical form
/// (no zero coefficients, nonnegative integer exponents).
class PolyExpression {
 public:
  using Terms = std::map<std::vector<unsigned>, Rational>;

  explicit PolyExpression(int nvars = 0) : nvars_(nvars) {}

  static PolyExpression constant(int nvars, const Rational& c);
  static PolyExpression variable(int nvars, int index);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned total_degree() const;  // 0 for constants and the zero polynomial

  PolyExpression operator+(const PolyExpression& other) const;
  PolyExpression operator-(const PolyExpression& other) const;
  PolyExpression operator*(const PolyExpression& other) const;
  PolyExpression operator-() const;
  PolyExpression pow(unsigned e) const;

  bool operator==(const PolyExpression& other) const = default;

  Rational evaluate(std::span<const Rational> values) const;

  /// Replace variable i by images[i]; all images share one variable set.
  PolyExpression substitute(const std::vector<PolyExpression>& images) const;

  std::string to_string(const std::vector<std::string>& names) const;

  /// Parse per the expression grammar, resolving names through `slots`.
  static PolyExpression parse(const std::string& text, int nvars,
                              const std::map<std::string, int>& slots);

  void add_term(std::vector<unsigned> exponents, const Rational& coeff);

 private:
  int nvars_;
  Terms terms_;
};

/// Canonical scalar-slot names for an arity-k function on a rank-p carrier:
/// x1..xk when p == 1, xj_c otherwise; x,y,z aliases when k*p <= 3.
std::map<std::string, int> variable_slots(int arity, int rank);
std::vector<std::string> canonical_variable_names(int arity, int rank);

enum class Backing { Expression, Table, Derived };

/// Immutable handle to a function S^k -> H, exact and deterministic.
class FunctionHandle {
 public:
  using TableMap = std::map<std::vector<Rational>, Element>;
  using Evaluator = std::function<Element(std::span<const Element>)>;

  const CarrierDescriptor& domain() const;
  const CarrierDescriptor& codomain() const;
  int arity() const;
  Backing backing() const;
  const std::string& label() const;

  /// The closed form, when Expression-backed; nullptr otherwise.
  const PolyExpression* expression() const;
  const TableMap* table() const;

  Element operator()(std::span<const Element> args) const;
  Element operator()(const Element& arg) const;
  Element operator()(const Element& a, const Element& b) const;
  Element operator()(std::initializer_list<Element> args) const;

  static FunctionHandle from_expression(PolyExpression expr, CarrierDescriptor domain, int arity,
                                        CarrierDescriptor codomain, std::string label = {});
  static FunctionHandle from_table(CarrierDescriptor domain, int arity, CarrierDescriptor codomain,
                                   TableMap table, std::string label = {});
  static FunctionHandle derived(CarrierDescriptor domain, int arity, CarrierDescriptor codomain,
                                std::string label, Evaluator eval);
  static FunctionHandle constant(CarrierDescriptor domain, int arity, Element value);

 private:
  struct Impl;
  explicit FunctionHandle(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Parse `text` into an Expression-backed handle S^k -> H.
FunctionHandle parse_expression(const std::string& text, const CarrierDescriptor& domain, int arity,
                                const CarrierDescriptor& codomain);

std::string print_expression(const FunctionHandle& f);

/// Derived (or symbolic, when both sides are expressions) f +- g.
FunctionHandle pointwise_combine(const FunctionHandle& f, const FunctionHandle& g, char sign);

/// Freeze f into a Table backing; finite domains only, |S|^k <= budget.
FunctionHandle tabulate(const FunctionHandle& f, Int budget = Int(1000000));

/// Flattened scalar coordinates of an argument tuple (the canonical table key).
std::vector<Rational> flatten_args(std::span<const Element> args);

}  // namespace gpoly
