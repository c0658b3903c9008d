#include <chrono>

#include "doctest.h"

#include "fixtures.hpp"
#include "globact/canonical.hpp"
#include "globact/catalog.hpp"
#include "globact/census.hpp"
#include "globact/error.hpp"
#include "oracle.hpp"

using namespace globact;
using fixtures::U;

namespace {
  void check_census(PartialAct const& A, CensusResult const& c) {
    auto const count = c.objects.size();
    CHECK(count == oracle::census_size(A));
    CHECK(c.objects[c.initial_index].triple.B.size() == c.tensor.size());
    CHECK(c.objects[c.terminal_index].triple.B.size() == c.hom.size());
    for (std::size_t i = 0; i < count; ++i) {
      auto const& triple = c.objects[i].triple;
      CHECK(triple.certificates == Certificates{true, true, true});
      CHECK(check_triangle(c.tensor, c.hom, triple));
      auto const from = canonical_from_tensor(c.tensor, triple);
      auto const to   = canonical_to_hom(c.hom, triple);
      CHECK(is_surjective(from, triple.B.size()));
      CHECK(is_surjective(to, c.hom.size()));
      REQUIRE(c.morphisms[c.initial_index][i]);
      REQUIRE(c.morphisms[i][c.terminal_index]);
      // Restricting back to the image of the embedding recovers A.
      auto const back = restrict(triple.B, triple.iota.map);
      CHECK(back == A);
      for (std::size_t j = 0; j < count; ++j) {
        if (i != j) {
          CHECK_FALSE(are_isomorphic_globalizations(triple, c.objects[j].triple));
        }
      }
    }
    for (std::size_t i = 1; i < count; ++i) {
      CHECK(c.objects[i - 1].triple.B.size() <= c.objects[i].triple.B.size());
    }
  }
}  // namespace

TEST_CASE("census of the fixtures") {
  SUBCASE("group") {
    auto A = fixtures::z2_act();
    auto c = census(A);
    CHECK(c.objects.size() == 1);
    check_census(A, c);
  }
  SUBCASE("semilattice") {
    auto A = fixtures::sl2_act();
    auto c = census(A);
    REQUIRE(c.objects.size() == 1);
    CHECK(c.objects[0].triple.B.size() == 3);
    check_census(A, c);
  }
  SUBCASE("nilpotent monoid") {
    auto       A     = fixtures::nsub();
    auto const start = std::chrono::steady_clock::now();
    auto       c     = census(A);
    auto const secs
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(secs < 1.0);
    REQUIRE(c.objects.size() == 2);
    CHECK(c.objects[0].triple.B.size() == 3);
    CHECK(c.objects[1].triple.B.size() == 4);
    CHECK(c.initial_index == 1);
    CHECK(c.terminal_index == 0);
    CHECK(c.objects[0].congruence == std::vector<index_type>{0, 1, 1, 2});
    CHECK(c.morphisms[1][0].has_value());
    CHECK_FALSE(c.morphisms[0][1].has_value());
    check_census(A, c);
  }
}

TEST_CASE("census preconditions") {
  CHECK_THROWS_AS(census(fixtures::l2_empty()), precondition_failed);
  CHECK_THROWS_AS(census(fixtures::f_failing()), precondition_failed);
  try {
    census(fixtures::singular());
    FAIL("expected precondition_failed");
  } catch (precondition_failed const& e) {
    CHECK((e.flag() == "firm" || e.flag() == "nonsingular"));
  }
  CHECK_THROWS_AS(census(PartialAct(fixtures::sl2(), {{0, 1}, {U, U}})), not_strong);
  CHECK_THROWS_AS(census(fixtures::nsub(), 3), search_space_too_large);
}

TEST_CASE("unitary global acts have a single globalization") {
  for (auto const& S : semigroups_up_to(3)) {
    for (std::size_t m = 1; m <= 2; ++m) {
      for_each_act(S, m, ActFilter::strong, true, [&](PartialAct const& A) {
        if (!A.is_global() || !A.is_unitary() || !is_firm(A) || !is_nonsingular(A)) {
          return;
        }
        auto c = census(A);
        REQUIRE(c.objects.size() == 1);
        CHECK(c.objects[0].triple.B.size() == A.size());
      });
    }
  }
}

TEST_CASE("census agrees with brute-force partition counting") {
  for (auto const& S : semigroups_up_to(3)) {
    for (std::size_t m = 1; m <= 2; ++m) {
      for_each_act(S, m, ActFilter::strong, true, [&](PartialAct const& A) {
        if (!is_firm(A) || !is_nonsingular(A)) {
          return;
        }
        check_census(A, census(A));
      });
    }
  }
}

TEST_CASE("quotient_globalization rejects non-congruences") {
  TensorAct T(fixtures::nsub());
  CHECK_THROWS_AS(quotient_globalization(T, {0, 0}), index_out_of_range);
  CHECK_THROWS_AS(quotient_globalization(T, {0, 1, 0, 2}), precondition_failed);
  CHECK(admissible_congruences(T).size() == 2);
}
