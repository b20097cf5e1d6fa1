#include "gpoly/carrier.hpp"

#include <sstream>

namespace gpoly {

const char* to_string(CarrierKind kind) {
  switch (kind) {
    case CarrierKind::FreeAbelian: return "free-abelian";
    case CarrierKind::Rationals: return "rationals";
    case CarrierKind::PositiveRationals: return "positive-rationals";
    case CarrierKind::NaturalsFromOne: return "naturals-from-one";
    case CarrierKind::CyclicProduct: return "cyclic";
  }
  return "?";
}

CarrierDescriptor::CarrierDescriptor(CarrierKind kind, int rank, std::vector<Int> moduli)
    : kind_(kind), rank_(rank), moduli_(std::move(moduli)) {
  if (rank_ <= 0) throw Error(ErrorKind::InvalidConfig, "rank must be positive");
  if (kind_ == CarrierKind::CyclicProduct) {
    if (moduli_.empty()) throw Error(ErrorKind::InvalidConfig, "cyclic carrier needs moduli");
    for (const Int& n : moduli_)
      if (n < 2) throw Error(ErrorKind::InvalidConfig, "cyclic moduli must be >= 2");
  } else if (!moduli_.empty()) {
    throw Error(ErrorKind::InvalidConfig, "moduli only apply to cyclic carriers");
  }
}

CarrierDescriptor CarrierDescriptor::free_abelian(int rank) {
  return CarrierDescriptor(CarrierKind::FreeAbelian, rank, {});
}
CarrierDescriptor CarrierDescriptor::rationals(int rank) {
  return CarrierDescriptor(CarrierKind::Rationals, rank, {});
}
CarrierDescriptor CarrierDescriptor::positive_rationals(int rank) {
  return CarrierDescriptor(CarrierKind::PositiveRationals, rank, {});
}
CarrierDescriptor CarrierDescriptor::naturals_from_one(int rank) {
  return CarrierDescriptor(CarrierKind::NaturalsFromOne, rank, {});
}
CarrierDescriptor CarrierDescriptor::cyclic(std::vector<Int> moduli) {
  int rank = static_cast<int>(moduli.size());
  return CarrierDescriptor(CarrierKind::CyclicProduct, rank, std::move(moduli));
}

bool CarrierDescriptor::has_zero() const {
  switch (kind_) {
    case CarrierKind::FreeAbelian:
    case CarrierKind::Rationals:
    case CarrierKind::CyclicProduct:
      return true;
    case CarrierKind::PositiveRationals:
    case CarrierKind::NaturalsFromOne:
      return false;
  }
  return false;
}

bool CarrierDescriptor::is_group() const { return has_zero(); }

bool CarrierDescriptor::closed_under_doubling() const {
  return kind_ != CarrierKind::NaturalsFromOne;
}

Int CarrierDescriptor::cardinality() const {
  if (!finite()) throw Error(ErrorKind::InfiniteCarrier, describe());
  Int card = 1;
  for (const Int& n : moduli_) card *= n;
  return card;
}

std::string CarrierDescriptor::describe() const {
  std::ostringstream os;
  os << to_string(kind_);
  if (kind_ == CarrierKind::CyclicProduct) {
    os << "(";
    for (size_t i = 0; i < moduli_.size(); ++i) os << (i ? "," : "") << moduli_[i];
    os << ")";
  } else {
    os << "(" << rank_ << ")";
  }
  return os.str();
}

bool contains(const CarrierDescriptor& d, const std::vector<Rational>& coords) {
  if (static_cast<int>(coords.size()) != d.rank()) return false;
  switch (d.kind()) {
    case CarrierKind::Rationals:
      return true;
    case CarrierKind::FreeAbelian:
      for (const Rational& c : coords)
        if (!is_integer(c)) return false;
      return true;
    case CarrierKind::PositiveRationals:
      for (const Rational& c : coords)
        if (c <= 0) return false;
      return true;
    case CarrierKind::NaturalsFromOne:
      for (const Rational& c : coords)
        if (!is_integer(c) || c < 1) return false;
      return true;
    case CarrierKind::CyclicProduct:
      for (size_t i = 0; i < coords.size(); ++i) {
        if (!is_integer(coords[i])) return false;
        Int v = numerator(coords[i]);
        if (v < 0 || v >= d.moduli()[i]) return false;
      }
      return true;
  }
  return false;
}

Element::Element(CarrierDescriptor descriptor, std::vector<Rational> coords)
    : desc_(std::move(descriptor)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != desc_.rank())
    throw Error(ErrorKind::NotInCarrier, "coordinate count != rank for " + desc_.describe());
  if (desc_.kind() == CarrierKind::CyclicProduct) {
    for (size_t i = 0; i < coords_.size(); ++i) {
      if (!is_integer(coords_[i]))
        throw Error(ErrorKind::NotInCarrier, "non-integer residue in " + desc_.describe());
      coords_[i] = Rational(mod_reduce(numerator(coords_[i]), desc_.moduli()[i]));
    }
  } else if (!contains(desc_, coords_)) {
    throw Error(ErrorKind::NotInCarrier, "coordinates outside " + desc_.describe());
  }
}

std::string Element::describe() const {
  std::ostringstream os;
  if (coords_.size() == 1) {
    os << coords_[0];
  } else {
    os << "(";
    for (size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
    os << ")";
  }
  return os.str();
}

Element make_element(const CarrierDescriptor& d, std::vector<Rational> coords) {
  return Element(d, std::move(coords));
}

void require_same_descriptor(const Element& a, const Element& b) {
  if (a.descriptor() != b.descriptor())
    throw Error(ErrorKind::DescriptorMismatch,
                a.descriptor().describe() + " vs " + b.descriptor().describe());
}

Element add(const Element& a, const Element& b) {
  require_same_descriptor(a, b);
  std::vector<Rational> coords(a.coords().size());
  for (size_t i = 0; i < coords.size(); ++i) coords[i] = a.coords()[i] + b.coords()[i];
  return Element(a.descriptor(), std::move(coords));
}

Element zero(const CarrierDescriptor& d) {
  if (!d.has_zero())
    throw Error(ErrorKind::NoZeroElement, "0 is not an element of " + d.describe());
  return Element(d, std::vector<Rational>(d.rank(), Rational(0)));
}

Element neg(const Element& a) {
  if (!a.descriptor().is_group())
    throw Error(ErrorKind::NotInCarrier, a.descriptor().describe() + " is not a group");
  std::vector<Rational> coords(a.coords().size());
  for (size_t i = 0; i < coords.size(); ++i) coords[i] = -a.coords()[i];
  return Element(a.descriptor(), std::move(coords));
}

Element sub(const Element& a, const Element& b) {
  require_same_descriptor(a, b);
  return add(a, neg(b));
}

Element scale(const Int& k, const Element& a) {
  if (!a.descriptor().is_group() && k < 0)
    throw Error(ErrorKind::NotInCarrier, "negative multiple outside a group");
  std::vector<Rational> coords(a.coords().size());
  for (size_t i = 0; i < coords.size(); ++i) coords[i] = Rational(k) * a.coords()[i];
  return Element(a.descriptor(), std::move(coords));
}

Element mul(const Element& a, const Element& b) {
  require_same_descriptor(a, b);
  const CarrierKind k = a.descriptor().kind();
  if (k != CarrierKind::Rationals && k != CarrierKind::CyclicProduct &&
      k != CarrierKind::FreeAbelian)
    throw Error(ErrorKind::NonRingCodomain, a.descriptor().describe());
  std::vector<Rational> coords(a.coords().size());
  for (size_t i = 0; i < coords.size(); ++i) coords[i] = a.coords()[i] * b.coords()[i];
  return Element(a.descriptor(), std::move(coords));
}

bool is_zero(const Element& a) {
  for (const Rational& c : a.coords())
    if (c != 0) return false;
  return true;
}

bool factorial_bijective(const CarrierDescriptor& d, unsigned m) {
  switch (d.kind()) {
    case CarrierKind::Rationals:
      return true;
    case CarrierKind::FreeAbelian:
      return m <= 1;
    case CarrierKind::CyclicProduct: {
      Int f = factorial(m);
      for (const Int& n : d.moduli())
        if (boost::multiprecision::gcd(f, n) != 1) return false;
      return true;
    }
    case CarrierKind::PositiveRationals:
    case CarrierKind::NaturalsFromOne:
      // codomain role requires a group
      return false;
  }
  return false;
}

Element divide_by_factorial(const Element& h, unsigned m) {
  const CarrierDescriptor& d = h.descriptor();
  if (!factorial_bijective(d, m))
    throw Error(ErrorKind::DivisibilityUnavailable,
                "multiplication by " + std::to_string(m) + "! is not bijective on " + d.describe());
  Int f = factorial(m);
  std::vector<Rational> coords(h.coords().size());
  if (d.kind() == CarrierKind::CyclicProduct) {
    for (size_t i = 0; i < coords.size(); ++i) {
      const Int& n = d.moduli()[i];
      Int inv = mod_inverse(mod_reduce(f, n), n);
      coords[i] = Rational(mod_reduce(numerator(h.coords()[i]) * inv, n));
    }
  } else {
    for (size_t i = 0; i < coords.size(); ++i) coords[i] = h.coords()[i] / Rational(f);
  }
  return Element(d, std::move(coords));
}

std::vector<Element> enumerate(const CarrierDescriptor& d) {
  if (!d.finite()) throw Error(ErrorKind::InfiniteCarrier, d.describe());
  std::vector<Element> out;
  std::vector<Int> idx(d.rank(), 0);
  for (;;) {
    std::vector<Rational> coords(idx.begin(), idx.end());
    out.emplace_back(d, std::move(coords));
    int pos = d.rank() - 1;
    while (pos >= 0) {
      idx[pos] += 1;
      if (idx[pos] < d.moduli()[pos]) break;
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

Element default_basepoint(const CarrierDescriptor& d) {
  if (d.has_zero()) return zero(d);
  return Element(d, std::vector<Rational>(d.rank(), Rational(1)));
}

}  // namespace gpoly
