#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpoly/rational.hpp"

namespace gpoly {

enum class CarrierKind {
  FreeAbelian,       // Z^p
  Rationals,         // Q^p
  PositiveRationals, // ]0,inf[^p, exact rationals
  NaturalsFromOne,   // {1,2,3,...}^p
  CyclicProduct,     // Z_{n_1} x ... x Z_{n_p}
};

const char* to_string(CarrierKind kind);

/// A commutative semigroup (or group) carrier. Immutable value type.
class CarrierDescriptor {
 public:
  static CarrierDescriptor free_abelian(int rank);
  static CarrierDescriptor rationals(int rank);
  static CarrierDescriptor positive_rationals(int rank);
  static CarrierDescriptor naturals_from_one(int rank);
  static CarrierDescriptor cyclic(std::vector<Int> moduli);

  CarrierKind kind() const { return kind_; }
  int rank() const { return rank_; }
  const std::vector<Int>& moduli() const { return moduli_; }

  bool has_zero() const;
  bool is_group() const;
  bool cancellative() const { return true; }
  bool closed_under_doubling() const;  // S + S = S
  bool finite() const { return kind_ == CarrierKind::CyclicProduct; }
  Int cardinality() const;             // throws InfiniteCarrier unless finite

  bool operator==(const CarrierDescriptor& other) const = default;

  std::string describe() const;

 private:
  CarrierDescriptor(CarrierKind kind, int rank, std::vector<Int> moduli);

  CarrierKind kind_;
  int rank_;
  std::vector<Int> moduli_;  // CyclicProduct only
};

/// A point of a carrier: exact coordinates, validated against the descriptor.
class Element {
 public:
  Element(CarrierDescriptor descriptor, std::vector<Rational> coords);

  const CarrierDescriptor& descriptor() const { return desc_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool operator==(const Element& other) const = default;
  bool operator<(const Element& other) const { return coords_ < other.coords_; }

  std::string describe() const;

 private:
  CarrierDescriptor desc_;
  std::vector<Rational> coords_;
};

Element make_element(const CarrierDescriptor& d, std::vector<Rational> coords);

/// Coordinatewise semigroup law (mod n_i on cyclic carriers).
Element add(const Element& a, const Element& b);

/// Neutral element; throws NoZeroElement when 0 is not in the carrier.
Element zero(const CarrierDescriptor& d);

/// Group subtraction; requires a group carrier.
Element sub(const Element& a, const Element& b);
Element neg(const Element& a);

/// Integer multiple k*a inside a group carrier.
Element scale(const Int& k, const Element& a);

/// Coordinatewise ring product; codomain-role carriers Rationals / CyclicProduct.
Element mul(const Element& a, const Element& b);

bool is_zero(const Element& a);

/// Whether multiplication by m! is bijective on the (group) carrier.
bool factorial_bijective(const CarrierDescriptor& d, unsigned m);

/// The unique y with m! * y = h; throws DivisibilityUnavailable.
Element divide_by_factorial(const Element& h, unsigned m);

/// All elements of a finite carrier, lexicographic coordinate order.
std::vector<Element> enumerate(const CarrierDescriptor& d);

/// Membership test for a coordinate vector (no reduction performed).
bool contains(const CarrierDescriptor& d, const std::vector<Rational>& coords);

/// Canonical default basepoint: zero when present, else all-ones.
Element default_basepoint(const CarrierDescriptor& d);

void require_same_descriptor(const Element& a, const Element& b);

}  // namespace gpoly
