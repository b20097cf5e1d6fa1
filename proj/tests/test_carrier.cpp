#include <doctest.h>

#include "gpoly/carrier.hpp"
#include "helpers.hpp"

using namespace gpoly;
using gpoly::testing::el;

namespace {

const CarrierDescriptor Q1 = CarrierDescriptor::rationals(1);
const CarrierDescriptor Z2 = CarrierDescriptor::free_abelian(2);
const CarrierDescriptor QP1 = CarrierDescriptor::positive_rationals(1);
const CarrierDescriptor N1 = CarrierDescriptor::naturals_from_one(1);
const CarrierDescriptor C5 = CarrierDescriptor::cyclic({5});

}  // namespace

TEST_CASE("descriptor flags are derived consistently") {
  CHECK(Z2.has_zero());
  CHECK(Q1.has_zero());
  CHECK(C5.has_zero());
  CHECK_FALSE(QP1.has_zero());
  CHECK_FALSE(N1.has_zero());

  for (const auto& d : {Z2, Q1, C5}) {
    CHECK(d.is_group());
    CHECK(d.cancellative());
  }
  CHECK_FALSE(QP1.is_group());
  CHECK_FALSE(N1.is_group());
  CHECK(QP1.cancellative());
  CHECK(N1.cancellative());

  CHECK(Z2.closed_under_doubling());
  CHECK(Q1.closed_under_doubling());
  CHECK(QP1.closed_under_doubling());
  CHECK(C5.closed_under_doubling());
  CHECK_FALSE(N1.closed_under_doubling());
}

TEST_CASE("cyclic moduli must be at least 2") {
  CHECK_THROWS_WITH_AS(CarrierDescriptor::cyclic({1}), doctest::Contains(">= 2"), Error);
  CHECK_THROWS_AS(CarrierDescriptor::cyclic({}), Error);
}

TEST_CASE("element coordinates are validated against the carrier") {
  CHECK_THROWS_AS(Element(QP1, {Rational(0)}), Error);
  CHECK_THROWS_AS(Element(QP1, {Rational(-1, 2)}), Error);
  CHECK_THROWS_AS(Element(N1, {Rational(0)}), Error);
  CHECK_THROWS_AS(Element(N1, {Rational(3, 2)}), Error);
  CHECK_THROWS_AS(Element(Z2, {Rational(1, 2), Rational(0)}), Error);
  CHECK(Element(C5, {Rational(7)}) == el(C5, {2}));  // residues reduce on entry
}

TEST_CASE("add is coordinatewise with modular reduction") {
  CHECK(add(el(Z2, {1, 2}), el(Z2, {3, 4})) == el(Z2, {4, 6}));
  CHECK(add(el(C5, {3}), el(C5, {4})) == el(C5, {2}));
  CHECK(add(el(QP1, "1/2"), el(QP1, "1/3")) == el(QP1, "5/6"));
  CHECK_THROWS_AS(add(el(C5, {1}), Element(Q1, {Rational(1)})), Error);
}

TEST_CASE("zero exists exactly on the carriers containing 0") {
  CHECK(zero(CarrierDescriptor::free_abelian(3)) ==
        el(CarrierDescriptor::free_abelian(3), {0, 0, 0}));
  CHECK(zero(CarrierDescriptor::cyclic({5, 7})) == el(CarrierDescriptor::cyclic({5, 7}), {0, 0}));
  CHECK_THROWS_AS(zero(QP1), Error);
  try {
    zero(QP1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoZeroElement);
  }
  Element z = zero(C5);
  for (const Element& a : enumerate(C5)) CHECK(add(z, a) == a);
}

TEST_CASE("factorial_bijective per carrier kind") {
  CHECK(factorial_bijective(C5, 2));
  CHECK_FALSE(factorial_bijective(CarrierDescriptor::cyclic({2}), 2));
  CHECK(factorial_bijective(Q1, 100));
  CHECK(factorial_bijective(Z2, 0));
  CHECK(factorial_bijective(Z2, 1));
  CHECK_FALSE(factorial_bijective(Z2, 2));
  CHECK(factorial_bijective(C5, 4));
  CHECK_FALSE(factorial_bijective(C5, 5));
  CHECK_FALSE(factorial_bijective(CarrierDescriptor::cyclic({5, 6}), 2));
}

TEST_CASE("divide_by_factorial inverts m! multiplication") {
  CHECK(divide_by_factorial(Element(Q1, {Rational(3)}), 3) == Element(Q1, {Rational(1, 2)}));
  Element y = divide_by_factorial(el(C5, {3}), 2);
  CHECK(y == el(C5, {4}));
  CHECK(scale(2, y) == el(C5, {3}));
  CHECK_THROWS_AS(divide_by_factorial(el(CarrierDescriptor::cyclic({2}), {1}), 2), Error);
  try {
    divide_by_factorial(el(CarrierDescriptor::cyclic({2}), {1}), 2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisibilityUnavailable);
  }

  // two-sided inverse wherever the predicate says so
  for (unsigned m : {0u, 1u, 2u, 3u, 4u}) {
    if (!factorial_bijective(C5, m)) continue;
    for (const Element& h : enumerate(C5)) {
      CHECK(scale(factorial(m), divide_by_factorial(h, m)) == h);
      CHECK(divide_by_factorial(scale(factorial(m), h), m) == h);
    }
  }
}

TEST_CASE("enumerate walks finite carriers in lexicographic order") {
  auto c3 = enumerate(CarrierDescriptor::cyclic({3}));
  REQUIRE(c3.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(c3[i].coords()[0] == i);

  CarrierDescriptor c22 = CarrierDescriptor::cyclic({2, 2});
  auto all = enumerate(c22);
  REQUIRE(all.size() == 4);
  CHECK(all[0] == el(c22, {0, 0}));
  CHECK(all[1] == el(c22, {0, 1}));
  CHECK(all[2] == el(c22, {1, 0}));
  CHECK(all[3] == el(c22, {1, 1}));

  CHECK_THROWS_AS(enumerate(Q1), Error);
}

TEST_CASE("add is commutative, associative, and cancellative") {
  CarrierDescriptor c23 = CarrierDescriptor::cyclic({2, 3});
  auto all = enumerate(c23);
  for (const Element& a : all)
    for (const Element& b : all) {
      CHECK(add(a, b) == add(b, a));
      for (const Element& c : all) {
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
        if (add(a, c) == add(b, c)) CHECK(a == b);
      }
    }

  Rng rng(42);
  for (const auto& d : {Q1, Z2, QP1, N1}) {
    for (int i = 0; i < 1000; ++i) {
      Element a = sample_element(d, rng, 10);
      Element b = sample_element(d, rng, 10);
      Element c = sample_element(d, rng, 10);
      CHECK(add(a, b) == add(b, a));
      CHECK(add(add(a, b), c) == add(a, add(b, c)));
      if (add(a, c) == add(b, c)) CHECK(a == b);
    }
  }
}

TEST_CASE("naturals-from-one is not closed under doubling") {
  // 1 is in the carrier but no sum of two members reaches it
  CHECK(contains(N1, {Rational(1)}));
  Element one = el(N1, {1});
  CHECK(add(one, one) == el(N1, {2}));
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Element a = sample_element(N1, rng, 10);
    Element b = sample_element(N1, rng, 10);
    CHECK(add(a, b).coords()[0] >= 2);
  }
}

TEST_CASE("default basepoint is zero when present, all-ones otherwise") {
  CHECK(default_basepoint(Q1) == zero(Q1));
  CHECK(default_basepoint(C5) == zero(C5));
  CHECK(default_basepoint(QP1) == el(QP1, {1}));
  CHECK(default_basepoint(CarrierDescriptor::naturals_from_one(2)) ==
        el(CarrierDescriptor::naturals_from_one(2), {1, 1}));
}

TEST_CASE("group operations stay inside group carriers only") {
  CHECK(sub(el(Z2, {1, 2}), el(Z2, {3, 4})) == el(Z2, {-2, -2}));
  CHECK(neg(el(C5, {2})) == el(C5, {3}));
  CHECK_THROWS_AS(sub(el(QP1, "1"), el(QP1, "2")), Error);
  CHECK(scale(-3, Element(Q1, {Rational(1, 2)})) == Element(Q1, {Rational(-3, 2)}));
}
