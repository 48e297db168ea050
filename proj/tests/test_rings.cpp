#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "dgk/constructions.hpp"
#include "dgk/finite_ring.hpp"
#include "dgk/hom_enum.hpp"
#include "dgk/presented_ring.hpp"

using namespace dgk;

TEST_CASE("the whole target corpus validates as rings") {
  for (const FiniteRing& r : default_ring_corpus()) {
    INFO(r.name);
    CHECK(validate_ring(r).ok());
  }
}

TEST_CASE("unit groups by enumeration") {
  UnitGroup u2 = units(zmod(2));
  CHECK(u2.units == std::vector<int>{1});

  UnitGroup u5 = units(zmod(5));
  CHECK(u5.units == std::vector<int>{1, 2, 3, 4});
  CHECK(u5.inverse_of[2] == 3);

  UnitGroup u4 = units(zmod(4));
  CHECK(u4.units == std::vector<int>{1, 3});

  // zmod(7) units form a cyclic group of order 6: some unit has order 6
  FiniteRing r7 = zmod(7);
  UnitGroup u7 = units(r7);
  CHECK(u7.size() == 6);
  bool has_order6 = false;
  for (int x : u7.units) {
    int pow = x, order = 1;
    while (pow != 1) {
      pow = r7.mul[pow][x];
      ++order;
    }
    has_order6 = has_order6 || order == 6;
  }
  CHECK(has_order6);
}

TEST_CASE("matrix and product rings") {
  FiniteRing m = matrix_ring(zmod(2), 2);
  CHECK(m.size() == 16);
  CHECK(validate_ring(m).ok());
  CHECK(units(m).size() == 6);  // GL2 over the 2-element field

  FiniteRing p = product_ring(zmod(2), zmod(3));
  CHECK(p.size() == 6);
  CHECK(validate_ring(p).ok());
  CHECK(units(p).size() == 2);  // componentwise units
}

TEST_CASE("ring spec literals") {
  CHECK(parse_ring_spec("zmod:5").size() == 5);
  CHECK(parse_ring_spec("mat:2:zmod:2").size() == 16);
  CHECK(parse_ring_spec("prod:zmod:2,zmod:3").size() == 6);
  CHECK_THROWS_AS(parse_ring_spec("zmod:1"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("frobenius:9"), ParseError);
}

TEST_CASE("hom enumeration: initial ring, free rings, forced images") {
  // the presentation of Z admits exactly one hom into anything
  for (const FiniteRing& r : default_ring_corpus())
    CHECK(count_ring_homs(presentation_z(), r) == 1);

  // two invertible generators, no relations: |units|^2
  PresentedRing zf2 = presentation_zfree({"x0", "x1"});
  CHECK(count_ring_homs(zf2, zmod(4)) == 4);
  for (const FiniteRing& r : default_ring_corpus()) {
    long long nu = units(r).size();
    CHECK(count_ring_homs(zf2, r) == nu * nu);
  }

  // universal ring of the unit-group delta of zmod(3): relations force g = 2
  PresentedRing p = universal_ring(ring_unit_delta(zmod(3)));
  auto homs = enumerate_ring_homs(p, zmod(3));
  REQUIRE(homs.size() == 1);
  int gi = p.generator_index("2");
  REQUIRE(gi >= 0);
  CHECK(homs[0][gi] == 2);
}

TEST_CASE("budget refusal is explicit and carries the requirement") {
  PresentedRing big = presentation_zfree({"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"});
  EnumOptions tight;
  tight.budget = 1000;
  try {
    enumerate_ring_homs(big, zmod(7), tight);
    FAIL("expected BudgetError");
  } catch (const BudgetError& e) {
    CHECK(e.required > 1000ULL);
  }
}

TEST_CASE("worker count does not change the answer") {
  PresentedRing zf2 = presentation_zfree({"x0", "x1"});
  EnumOptions serial, parallel;
  parallel.jobs = 4;
  for (const FiniteRing& r : {zmod(7), matrix_ring(zmod(2), 2)})
    CHECK(enumerate_ring_homs(zf2, r, serial) == enumerate_ring_homs(zf2, r, parallel));
}

TEST_CASE("propagation enumerator agrees with brute force") {
  std::vector<PresentedRing> ps = {presentation_z(), presentation_zfree({"x0", "x1"}),
                                   universal_ring(ring_unit_delta(zmod(3))),
                                   universal_ring(x3_delta(2)),
                                   parse_presentation_spec("localized-zfree:2")};
  for (const PresentedRing& p : ps)
    for (const FiniteRing& r : {zmod(2), zmod(3), zmod(5)}) {
      auto brute = enumerate_ring_homs(p, r);
      std::sort(brute.begin(), brute.end());
      auto prop = enumerate_ring_homs_by_propagation(p, r);
      CHECK(brute == prop);
    }
}

TEST_CASE("hom signatures are deterministic tables") {
  auto corpus = default_ring_corpus();
  auto sig = hom_signature(presentation_zfree({"x0"}), corpus);
  REQUIRE(sig.size() == corpus.size());
  CHECK(sig[0].ring == "zmod:2");
  CHECK(sig[0].count == 1);
  CHECK(sig[5].ring == "zmod:7");
  CHECK(sig[5].count == 6);
}
