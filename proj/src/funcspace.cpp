#include "gpoly/funcspace.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace gpoly {

// ---------------------------------------------------------------------------
// PolyExpression

void PolyExpression::add_term(std::vector<unsigned> exponents, const Rational& coeff) {
  if (coeff == 0) return;
  if (static_cast<int>(exponents.size()) != nvars_)
    throw Error(ErrorKind::InvalidConfig, "exponent vector length != nvars");
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(std::move(exponents), coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

PolyExpression PolyExpression::constant(int nvars, const Rational& c) {
  PolyExpression p(nvars);
  p.add_term(std::vector<unsigned>(nvars, 0), c);
  return p;
}

PolyExpression PolyExpression::variable(int nvars, int index) {
  if (index < 0 || index >= nvars)
    throw Error(ErrorKind::UnknownVariable, "variable index out of range");
  PolyExpression p(nvars);
  std::vector<unsigned> e(nvars, 0);
  e[index] = 1;
  p.add_term(std::move(e), Rational(1));
  return p;
}

unsigned PolyExpression::total_degree() const {
  unsigned deg = 0;
  for (const auto& [e, c] : terms_) {
    unsigned sum = 0;
    for (unsigned x : e) sum += x;
    if (sum > deg) deg = sum;
  }
  return deg;
}

PolyExpression PolyExpression::operator+(const PolyExpression& other) const {
  if (nvars_ != other.nvars_) throw Error(ErrorKind::InvalidConfig, "nvars mismatch");
  PolyExpression out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

PolyExpression PolyExpression::operator-() const {
  PolyExpression out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

PolyExpression PolyExpression::operator-(const PolyExpression& other) const {
  return *this + (-other);
}

PolyExpression PolyExpression::operator*(const PolyExpression& other) const {
  if (nvars_ != other.nvars_) throw Error(ErrorKind::InvalidConfig, "nvars mismatch");
  PolyExpression out(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      std::vector<unsigned> e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(std::move(e), ca * cb);
    }
  }
  return out;
}

PolyExpression PolyExpression::pow(unsigned e) const {
  PolyExpression out = constant(nvars_, Rational(1));
  PolyExpression base = *this;
  while (e > 0) {
    if (e & 1u) out = out * base;
    base = base * base;
    e >>= 1u;
  }
  return out;
}

Rational PolyExpression::evaluate(std::span<const Rational> values) const {
  if (static_cast<int>(values.size()) != nvars_)
    throw Error(ErrorKind::ArityMismatch, "value count != nvars");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i) {
      for (unsigned j = 0; j < e[i]; ++j) t *= values[i];
    }
    acc += t;
  }
  return acc;
}

PolyExpression PolyExpression::substitute(const std::vector<PolyExpression>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw Error(ErrorKind::InvalidConfig, "substitution image count != nvars");
  int out_vars = images.empty() ? 0 : images.front().nvars();
  PolyExpression out(out_vars);
  for (const auto& [e, c] : terms_) {
    PolyExpression t = PolyExpression::constant(out_vars, c);
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] > 0) t = t * images[i].pow(e[i]);
    }
    out = out + t;
  }
  return out;
}

std::string PolyExpression::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest-degree-first reads naturally; map order is lexicographic, reverse it
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational coeff = c;
    if (first) {
      first = false;
      if (coeff < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    bool has_vars = false;
    for (unsigned x : e)
      if (x) has_vars = true;
    std::ostringstream mono;
    bool firstvar = true;
    for (int i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      if (!firstvar) mono << "*";
      firstvar = false;
      mono << names.at(i);
      if (e[i] > 1) mono << "^" << e[i];
    }
    if (!has_vars) {
      os << gpoly::to_string(coeff);
    } else if (coeff == 1) {
      os << mono.str();
    } else {
      os << gpoly::to_string(coeff) << "*" << mono.str();
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;
  int nvars;
  const std::map<std::string, int>& slots;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorKind::SyntaxError, msg + " at position " + std::to_string(pos));
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string read_digits() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected digits");
    return text.substr(start, pos - start);
  }

  unsigned read_uint() {
    if (peek('-')) throw Error(ErrorKind::NegativeExponent, "exponents must be nonnegative");
    return static_cast<unsigned>(std::stoul(read_digits()));
  }

  PolyExpression parse_expr() {
    PolyExpression acc = parse_term();
    for (;;) {
      if (accept('+')) {
        acc = acc + parse_term();
      } else if (accept('-')) {
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }

  PolyExpression parse_term() {
    PolyExpression acc = parse_factor();
    while (accept('*')) acc = acc * parse_factor();
    return acc;
  }

  PolyExpression parse_factor() {
    PolyExpression base = parse_base();
    if (accept('^')) {
      unsigned e = read_uint();
      return base.pow(e);
    }
    return base;
  }

  PolyExpression parse_base() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      PolyExpression inner = parse_expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      bool negative = false;
      if (c == '-') {
        negative = true;
        ++pos;
      }
      Int num(read_digits());
      Int den = 1;
      if (accept('/')) den = Int(read_digits());
      if (den == 0) fail("zero denominator");
      Rational q(num, den);
      if (negative) q = -q;
      return PolyExpression::constant(nvars, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::string name = text.substr(start, pos - start);
      auto it = slots.find(name);
      if (it == slots.end())
        throw Error(ErrorKind::UnknownVariable, "'" + name + "'");
      return PolyExpression::variable(nvars, it->second);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

PolyExpression PolyExpression::parse(const std::string& text, int nvars,
                                     const std::map<std::string, int>& slots) {
  Parser p{text, 0, nvars, slots};
  PolyExpression result = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return result;
}

std::vector<std::string> canonical_variable_names(int arity, int rank) {
  std::vector<std::string> names;
  for (int j = 1; j <= arity; ++j) {
    for (int c = 1; c <= rank; ++c) {
      if (rank == 1)
        names.push_back("x" + std::to_string(j));
      else
        names.push_back("x" + std::to_string(j) + "_" + std::to_string(c));
    }
  }
  return names;
}

std::map<std::string, int> variable_slots(int arity, int rank) {
  std::map<std::string, int> slots;
  auto names = canonical_variable_names(arity, rank);
  for (int i = 0; i < static_cast<int>(names.size()); ++i) slots[names[i]] = i;
  int total = arity * rank;
  if (total <= 3) {
    const char* aliases[] = {"x", "y", "z"};
    for (int i = 0; i < total; ++i) slots[aliases[i]] = i;
  }
  return slots;
}

// ---------------------------------------------------------------------------
// FunctionHandle

struct FunctionHandle::Impl {
  CarrierDescriptor domain;
  CarrierDescriptor codomain;
  int arity;
  Backing backing;
  std::string label;
  std::optional<PolyExpression> expr;
  std::optional<TableMap> table;
  Evaluator fn;
};

const CarrierDescriptor& FunctionHandle::domain() const { return impl_->domain; }
const CarrierDescriptor& FunctionHandle::codomain() const { return impl_->codomain; }
int FunctionHandle::arity() const { return impl_->arity; }
Backing FunctionHandle::backing() const { return impl_->backing; }
const std::string& FunctionHandle::label() const { return impl_->label; }
const PolyExpression* FunctionHandle::expression() const {
  return impl_->expr ? &*impl_->expr : nullptr;
}
const FunctionHandle::TableMap* FunctionHandle::table() const {
  return impl_->table ? &*impl_->table : nullptr;
}

std::vector<Rational> flatten_args(std::span<const Element> args) {
  std::vector<Rational> flat;
  for (const Element& a : args)
    flat.insert(flat.end(), a.coords().begin(), a.coords().end());
  return flat;
}

namespace {

Element scalar_to_codomain(const Rational& value, const CarrierDescriptor& codomain) {
  switch (codomain.kind()) {
    case CarrierKind::Rationals:
      return Element(codomain, {value});
    case CarrierKind::FreeAbelian:
      if (!is_integer(value))
        throw Error(ErrorKind::NotInCarrier,
                    "expression value " + to_string(value) + " is not an integer");
      return Element(codomain, {value});
    case CarrierKind::CyclicProduct:
      return Element(codomain, {Rational(rational_mod(value, codomain.moduli()[0]))});
    default:
      throw Error(ErrorKind::InvalidConfig, "codomain must be a group");
  }
}

}  // namespace

Element FunctionHandle::operator()(std::span<const Element> args) const {
  if (static_cast<int>(args.size()) != impl_->arity)
    throw Error(ErrorKind::ArityMismatch,
                std::to_string(args.size()) + " args for arity " + std::to_string(impl_->arity));
  for (const Element& a : args)
    if (a.descriptor() != impl_->domain)
      throw Error(ErrorKind::DescriptorMismatch,
                  a.descriptor().describe() + " vs " + impl_->domain.describe());
  switch (impl_->backing) {
    case Backing::Expression: {
      std::vector<Rational> flat = flatten_args(args);
      return scalar_to_codomain(impl_->expr->evaluate(flat), impl_->codomain);
    }
    case Backing::Table: {
      auto it = impl_->table->find(flatten_args(args));
      if (it == impl_->table->end()) {
        std::string where;
        for (const Element& a : args) where += a.describe() + " ";
        throw Error(ErrorKind::MissingEntry, "no table entry for " + where);
      }
      return it->second;
    }
    case Backing::Derived:
      return impl_->fn(args);
  }
  throw Error(ErrorKind::InvalidConfig, "corrupt backing");
}

Element FunctionHandle::operator()(const Element& arg) const {
  return (*this)(std::span<const Element>(&arg, 1));
}

Element FunctionHandle::operator()(const Element& a, const Element& b) const {
  Element args[2] = {a, b};
  return (*this)(std::span<const Element>(args, 2));
}

Element FunctionHandle::operator()(std::initializer_list<Element> args) const {
  return (*this)(std::span<const Element>(args.begin(), args.size()));
}

namespace {

void check_function_signature(const CarrierDescriptor& codomain, int arity) {
  if (arity < 0) throw Error(ErrorKind::ArityMismatch, "arity must be >= 0");
  if (!codomain.is_group())
    throw Error(ErrorKind::InvalidConfig,
                "codomain must be a group, got " + codomain.describe());
}

}  // namespace

FunctionHandle FunctionHandle::from_expression(PolyExpression expr, CarrierDescriptor domain,
                                               int arity, CarrierDescriptor codomain,
                                               std::string label) {
  check_function_signature(codomain, arity);
  if (codomain.rank() != 1)
    throw Error(ErrorKind::InvalidConfig, "expression backing needs a rank-1 codomain");
  if (expr.nvars() != arity * domain.rank())
    throw Error(ErrorKind::InvalidConfig, "expression variable count != arity * rank");
  auto impl = std::make_shared<Impl>(Impl{std::move(domain), std::move(codomain), arity,
                                          Backing::Expression, std::move(label), std::move(expr),
                                          std::nullopt, nullptr});
  return FunctionHandle(std::move(impl));
}

FunctionHandle FunctionHandle::from_table(CarrierDescriptor domain, int arity,
                                          CarrierDescriptor codomain, TableMap table,
                                          std::string label) {
  check_function_signature(codomain, arity);
  auto impl = std::make_shared<Impl>(Impl{std::move(domain), std::move(codomain), arity,
                                          Backing::Table, std::move(label), std::nullopt,
                                          std::move(table), nullptr});
  return FunctionHandle(std::move(impl));
}

FunctionHandle FunctionHandle::derived(CarrierDescriptor domain, int arity,
                                       CarrierDescriptor codomain, std::string label,
                                       Evaluator eval) {
  check_function_signature(codomain, arity);
  auto impl = std::make_shared<Impl>(Impl{std::move(domain), std::move(codomain), arity,
                                          Backing::Derived, std::move(label), std::nullopt,
                                          std::nullopt, std::move(eval)});
  return FunctionHandle(std::move(impl));
}

FunctionHandle FunctionHandle::constant(CarrierDescriptor domain, int arity, Element value) {
  CarrierDescriptor codomain = value.descriptor();
  return derived(std::move(domain), arity, std::move(codomain), "const " + value.describe(),
                 [value](std::span<const Element>) { return value; });
}

FunctionHandle parse_expression(const std::string& text, const CarrierDescriptor& domain, int arity,
                                const CarrierDescriptor& codomain) {
  int nvars = arity * domain.rank();
  PolyExpression expr = PolyExpression::parse(text, nvars, variable_slots(arity, domain.rank()));
  return FunctionHandle::from_expression(std::move(expr), domain, arity, codomain, text);
}

std::string print_expression(const FunctionHandle& f) {
  const PolyExpression* e = f.expression();
  if (!e) throw Error(ErrorKind::InvalidConfig, "handle is not expression-backed");
  return e->to_string(canonical_variable_names(f.arity(), f.domain().rank()));
}

FunctionHandle pointwise_combine(const FunctionHandle& f, const FunctionHandle& g, char sign) {
  if (f.domain() != g.domain() || f.codomain() != g.codomain())
    throw Error(ErrorKind::DescriptorMismatch, "pointwise_combine domain/codomain mismatch");
  if (f.arity() != g.arity())
    throw Error(ErrorKind::ArityMismatch, "pointwise_combine arity mismatch");
  if (sign != '+' && sign != '-')
    throw Error(ErrorKind::InvalidConfig, "sign must be '+' or '-'");
  if (f.expression() && g.expression()) {
    PolyExpression e =
        sign == '+' ? *f.expression() + *g.expression() : *f.expression() - *g.expression();
    return FunctionHandle::from_expression(std::move(e), f.domain(), f.arity(), f.codomain(),
                                           "(" + f.label() + ")" + sign + "(" + g.label() + ")");
  }
  FunctionHandle fc = f, gc = g;
  return FunctionHandle::derived(
      f.domain(), f.arity(), f.codomain(), "(" + f.label() + ")" + sign + "(" + g.label() + ")",
      [fc, gc, sign](std::span<const Element> args) {
        Element a = fc(args), b = gc(args);
        return sign == '+' ? add(a, b) : sub(a, b);
      });
}

FunctionHandle tabulate(const FunctionHandle& f, Int budget) {
  if (!f.domain().finite()) throw Error(ErrorKind::InfiniteCarrier, f.domain().describe());
  Int card = f.domain().cardinality();
  Int total = 1;
  for (int i = 0; i < f.arity(); ++i) {
    total *= card;
    if (total > budget)
      throw Error(ErrorKind::BudgetExceeded, "tabulation needs more than " + to_string(Rational(budget)) + " entries");
  }
  std::vector<Element> points = enumerate(f.domain());
  FunctionHandle::TableMap table;
  std::vector<size_t> idx(f.arity(), 0);
  for (;;) {
    std::vector<Element> args;
    args.reserve(f.arity());
    for (size_t i : idx) args.push_back(points[i]);
    table.emplace(flatten_args(args), f(args));
    int pos = f.arity() - 1;
    while (pos >= 0) {
      if (++idx[pos] < points.size()) break;
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return FunctionHandle::from_table(f.domain(), f.arity(), f.codomain(), std::move(table),
                                    "table(" + f.label() + ")");
}

}  // namespace gpoly
