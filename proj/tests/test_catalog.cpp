#include <random>
#include <set>

#include "doctest.h"

#include "fixtures.hpp"
#include "globact/catalog.hpp"

using namespace globact;

TEST_CASE("semigroup counts up to isomorphism") {
  CHECK(semigroups_of_order(1).size() == 1);
  CHECK(semigroups_of_order(2).size() == 5);
  CHECK(semigroups_of_order(3).size() == 24);
}

TEST_CASE("catalog entries are distinct valid semigroups") {
  std::set<std::vector<index_type>> seen;
  for (auto const& S : semigroups_up_to(3)) {
    CHECK(seen.insert(S->flat_table()).second);
  }
  CHECK(seen.size() == 30);
}

TEST_CASE("for_each_act filters") {
  auto        S     = fixtures::sl2();
  std::size_t pa    = 0;
  std::size_t strong = 0;
  std::size_t all    = 0;
  for_each_act(S, 2, ActFilter::pa, false, [&](PartialAct const& A) {
    ++pa;
    strong += A.is_strong();
  });
  for_each_act(S, 2, ActFilter::strong, false, [&](PartialAct const& A) {
    CHECK(A.is_strong());
    ++all;
  });
  CHECK(all == strong);
  CHECK(pa >= strong);
  CHECK(strong > 0);
}

TEST_CASE("up to isomorphism keeps one act per relabelling class") {
  auto        S = fixtures::sl2();
  std::size_t labelled = 0, classes = 0;
  for_each_act(S, 2, ActFilter::strong, false, [&](PartialAct const&) { ++labelled; });
  for_each_act(S, 2, ActFilter::strong, true, [&](PartialAct const&) { ++classes; });
  CHECK(classes < labelled);
  CHECK(2 * classes >= labelled);
}

TEST_CASE("random_global_act is total and seeded") {
  std::mt19937_64 a(3), b(3);
  auto            S = fixtures::nsub_monoid();
  auto            x = random_global_act(S, 3, a);
  auto            y = random_global_act(S, 3, b);
  CHECK(x == y);
  CHECK(x.as_partial().is_global());
}
