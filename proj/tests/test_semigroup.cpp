#include "doctest.h"

#include "fixtures.hpp"
#include "globact/catalog.hpp"
#include "globact/error.hpp"
#include "globact/semigroup.hpp"

using namespace globact;

TEST_CASE("trivial monoid") {
  Semigroup S(Semigroup::table_type{{0}});
  CHECK(S.size() == 1);
  CHECK(S.is_monoid());
  CHECK(S.is_group());
  CHECK(S.is_factorizable());
  CHECK(S.identity() == 0u);
}

TEST_CASE("two-element semilattice with identity") {
  auto S = fixtures::sl2();
  CHECK(S->is_monoid());
  CHECK(S->identity() == 0u);
  CHECK_FALSE(S->is_group());
  CHECK(S->is_factorizable());
}

TEST_CASE("left zero semigroup") {
  auto S = fixtures::l2();
  CHECK_FALSE(S->is_monoid());
  CHECK_FALSE(S->is_group());
  CHECK(S->is_factorizable());
}

TEST_CASE("cyclic group of order two") {
  auto S = fixtures::z2();
  CHECK(S->is_group());
  CHECK(S->inverse(1) == 1);
  CHECK(S->inverse(0) == 0);
}

TEST_CASE("null semigroup is not factorizable") {
  Semigroup S({{0, 0}, {0, 0}});
  CHECK_FALSE(S.is_factorizable());
  CHECK_FALSE(S.is_monoid());
}

TEST_CASE("inverse outside a group throws") {
  CHECK_THROWS_AS(fixtures::sl2()->inverse(1), precondition_failed);
}

TEST_CASE("invalid tables") {
  CHECK_THROWS_AS(Semigroup({}), index_out_of_range);
  CHECK_THROWS_AS(Semigroup({{0, 2}, {1, 1}}), index_out_of_range);
  CHECK_THROWS_AS(Semigroup({{0, 1}, {1}}), index_out_of_range);
  CHECK_THROWS_AS(Semigroup({{1, 1}, {0, 0}}), not_associative);
}

TEST_CASE("non-associativity reports the first failing triple") {
  try {
    validate_semigroup({{1, 1}, {0, 0}});
    FAIL("expected not_associative");
  } catch (not_associative const& e) {
    CHECK(e.s == 0);
    CHECK(e.t == 0);
    CHECK(e.u == 0);
  }
}

TEST_CASE("adjoin_identity") {
  SUBCASE("left zero") {
    auto S1 = adjoin_identity(*fixtures::l2());
    CHECK(S1.size() == 3);
    CHECK(S1.identity() == 2u);
    CHECK(S1.product(0, 1) == 0);
    CHECK(S1.product(1, 0) == 1);
    CHECK(S1.product(2, 2) == 2);
  }
  SUBCASE("monoid gains a new identity") {
    auto S1 = adjoin_identity(*fixtures::z2());
    CHECK(S1.size() == 3);
    CHECK(S1.is_monoid());
    CHECK(S1.identity() == 2u);
    CHECK_FALSE(S1.is_group());
    CHECK(S1.product(1, 1) == 0);
  }
  SUBCASE("trivial") {
    auto S1 = adjoin_identity(Semigroup(Semigroup::table_type{{0}}));
    CHECK(S1.table() == Semigroup::table_type{{0, 0}, {0, 1}});
  }
}

TEST_CASE("adjoin_identity over every semigroup of order at most 3") {
  for (auto const& S : semigroups_up_to(3)) {
    auto S1 = adjoin_identity(*S);
    CHECK(S1.is_monoid());
    CHECK(S1.is_factorizable());
    for (index_type s = 0; s < S->size(); ++s) {
      for (index_type t = 0; t < S->size(); ++t) {
        CHECK(S1.product(s, t) == S->product(s, t));
      }
    }
    CHECK_NOTHROW(validate_semigroup(S1.table()));
  }
}
