#include <numeric>

#include "doctest.h"

#include "contentlab/finring.hpp"
#include "contentlab/ideals.hpp"
#include "contentlab/quotient.hpp"

using namespace contentlab;

namespace {

std::vector<Elem> members_of(const ElementSet& s) {
  std::vector<Elem> out;
  s.for_each([&](std::size_t i) { out.push_back(static_cast<Elem>(i)); });
  return out;
}

std::vector<Elem> v(std::initializer_list<Elem> xs) { return xs; }

}  // namespace

TEST_CASE("Z/n tables") {
  auto z6 = make_zmod(6);
  CHECK(z6->size() == 6);
  CHECK(z6->add(4, 5) == 3);
  CHECK(z6->mul(4, 5) == 2);
  CHECK(z6->neg(2) == 4);
  CHECK(z6->from_int(-1) == 5);
  CHECK(z6->pow(2, 3) == 2);
  CHECK(make_zmod(1)->size() == 1);
  CHECK_THROWS_AS(make_zmod(0), Error);
  try {
    make_zmod(5000);
    FAIL("expected cap error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::size_cap);
  }
}

TEST_CASE("classification") {
  auto z4 = classify_elements(*make_zmod(4));
  CHECK(members_of(z4.units) == v({1, 3}));
  CHECK(members_of(z4.zero_divisors) == v({0, 2}));
  CHECK(members_of(z4.nilpotents) == v({0, 2}));
  CHECK(members_of(z4.idempotents) == v({0, 1}));

  auto z6 = classify_elements(*make_zmod(6));
  CHECK(members_of(z6.units) == v({1, 5}));
  CHECK(members_of(z6.zero_divisors) == v({0, 2, 3, 4}));
  CHECK(members_of(z6.nilpotents) == v({0}));
  CHECK(members_of(z6.idempotents) == v({0, 1, 3, 4}));

  auto z5 = classify_elements(*make_zmod(5));
  CHECK(members_of(z5.zero_divisors) == v({0}));
}

TEST_CASE("products") {
  auto z2 = make_zmod(2), z3 = make_zmod(3);
  auto p = make_product(z2, z3);
  CHECK(p->size() == 6);
  CHECK(p->descriptor() == "prod(Z/2,Z/3)");
  CHECK(find_isomorphism(*p, *make_zmod(6)).has_value());
  CHECK(find_isomorphism(*make_product(make_zmod(1), make_zmod(4)), *make_zmod(4)).has_value());
  CHECK_FALSE(find_isomorphism(*make_product(z2, z2), *make_zmod(4)).has_value());

  auto z2z2 = make_product(z2, z2);
  CHECK(members_of(classify_elements(*z2z2).idempotents).size() == 4);
  CHECK(z2z2->name(z2z2->pair(1, 0)) == "(1,0)");

  for (std::size_t a : {2, 3, 4, 5})
    for (std::size_t b : {3, 5, 7}) {
      if (std::gcd(a, b) != 1) continue;
      CAPTURE(a);
      CAPTURE(b);
      CHECK(find_isomorphism(*make_product(make_zmod(a), make_zmod(b)), *make_zmod(a * b)).has_value());
    }
}

TEST_CASE("truncated polynomial rings") {
  auto [t1, x1] = make_truncated_poly_ring(make_zmod(2), 1);
  CHECK(t1->size() == 2);
  CHECK(x1.index == t1->zero());
  CHECK(find_isomorphism(*t1, *make_zmod(2)).has_value());

  auto [t, x] = make_truncated_poly_ring(make_zmod(2), 4);
  CHECK(t->size() == 16);
  CHECK(t->descriptor() == "trunc(Z/2,4)");
  CHECK(t->pow(x.index, 3) != t->zero());
  CHECK(t->pow(x.index, 4) == t->zero());
  CHECK(t->name(t->pow(x.index, 3)) == "x^3");
  CHECK(t->name(t->add(t->one(), t->pow(x.index, 2))) == "1+x^2");

  auto [t4, y] = make_truncated_poly_ring(make_zmod(4), 2);
  CHECK(t4->size() == 16);
  const Elem two_x = t4->mul(t4->from_int(2), y.index);
  CHECK(two_x != t4->zero());
  CHECK(t4->mul(two_x, two_x) == t4->zero());
  CHECK(t4->name(two_x) == "2*x");
}

TEST_CASE("axioms hold for constructed rings") {
  std::vector<RingPtr> rings{make_zmod(1), make_zmod(7), make_zmod(12),
                             make_product(make_zmod(2), make_zmod(4)),
                             make_truncated_poly_ring(make_zmod(3), 2).first,
                             make_truncated_poly_ring(make_zmod(2), 4).first,
                             make_truncated_poly_ring(make_truncated_poly_ring(make_zmod(2), 2).first, 2).first};
  for (const auto& r : rings) {
    CAPTURE(r->descriptor());
    CHECK_FALSE(check_axioms(*r).has_value());
    // multiplication by u is a bijection iff u is regular iff u is a unit
    const auto cls = classify_elements(*r);
    for (Elem u = 0; u < r->size(); ++u) {
      ElementSet image(r->size());
      for (Elem a = 0; a < r->size(); ++a) image.set(r->mul(u, a));
      const bool bijective = image.count() == r->size();
      CHECK(bijective == cls.regular.test(u));
      CHECK(bijective == cls.units.test(u));
    }
  }
}

TEST_CASE("quotients") {
  auto z4 = make_zmod(4);
  auto [q, pi] = make_quotient(z4, ideal_generate(z4, {2}));
  CHECK(q->size() == 2);
  CHECK(find_isomorphism(*q, *make_zmod(2)).has_value());
  CHECK(pi.is_homomorphism());

  auto z6 = make_zmod(6);
  auto q3 = make_quotient(z6, ideal_generate(z6, {3})).first;
  CHECK(find_isomorphism(*q3, *make_zmod(3)).has_value());

  auto [t, x] = make_truncated_poly_ring(make_zmod(2), 3);
  auto q0 = make_quotient(t, Ideal::zero(t));
  CHECK(q0.first->size() == t->size());
  CHECK(find_isomorphism(*q0.first, *t).has_value());
  CHECK_FALSE(check_axioms(*q0.first).has_value());

  auto [ring, map] = make_quotient(t, ideal_generate(t, {x.index}));
  CHECK(ring->size() == 2);
  CHECK(map.is_homomorphism());
  const auto sec = map.section();
  for (Elem b = 0; b < ring->size(); ++b) CHECK(map(sec[b]) == b);
}

TEST_CASE("localization") {
  auto z6 = make_zmod(6);
  auto w = SaturatedMultSet::make(z6, {ideal_generate(z6, {2})});
  auto [l, m] = localize(z6, w);
  CHECK(l->size() == 2);
  CHECK(m.is_homomorphism());

  auto z4 = make_zmod(4);
  auto w4 = SaturatedMultSet::make(z4, {ideal_generate(z4, {2})});
  CHECK(members_of(w4.members()) == v({1, 3}));
  CHECK(localize(z4, w4).first->size() == 4);

  CHECK_THROWS_AS(SaturatedMultSet::make(z4, {Ideal::zero(z4)}), Error);

  for (std::size_t n : {2, 6, 8, 12}) {
    auto r = make_zmod(n);
    auto primes = enumerate_ideals(r, IdealFamily::prime);
    auto all = SaturatedMultSet::make(r, primes);
    auto [lr, lm] = localize(r, all);
    CHECK(find_isomorphism(*lr, *r).has_value());
    for (const auto& p : primes) {
      auto [lp, pm] = localize(r, SaturatedMultSet::make(r, {p}));
      // no nonunit regular elements
      const auto cls = classify_elements(*lp);
      CHECK(cls.regular == cls.units);
      for (Elem a = 0; a < r->size(); ++a)
        if (SaturatedMultSet::make(r, {p}).contains(a)) CHECK(lp->is_unit(pm(a)));
    }
  }
}
