#pragma once

#include <memory>

#include "globact/partial_act.hpp"
#include "globact/semigroup.hpp"

namespace globact::fixtures {

  inline constexpr index_type U = UNDEFINED;

  inline std::shared_ptr<Semigroup const> make(Semigroup::table_type const& table) {
    return std::make_shared<Semigroup const>(table);
  }

  inline std::shared_ptr<Semigroup const> trivial_monoid() {
    return make({{0}});
  }

  // {1, e}, ee = e.
  inline std::shared_ptr<Semigroup const> sl2() {
    return make({{0, 1}, {1, 1}});
  }

  // {1, g}, gg = 1.
  inline std::shared_ptr<Semigroup const> z2() {
    return make({{0, 1}, {1, 0}});
  }

  // {1, x, x^2, x^3} with x^4 = x^3.
  inline std::shared_ptr<Semigroup const> nsub_monoid() {
    return make({{0, 1, 2, 3}, {1, 2, 3, 3}, {2, 3, 3, 3}, {3, 3, 3, 3}});
  }

  // Left zero semigroup {x, y}: xy = x.
  inline std::shared_ptr<Semigroup const> l2() {
    return make({{0, 0}, {1, 1}});
  }

  // One point over the trivial monoid.
  inline PartialAct triv() {
    return PartialAct(trivial_monoid(), {{0}});
  }

  // Semilattice act: A = {a, b}, a.1 = a, b.1 = b, b.e = b, a.e undefined.
  inline PartialAct sl2_act() {
    return PartialAct(sl2(), {{0, U}, {1, 1}});
  }

  // Group act: A = {a}, a.1 = a, a.g undefined.
  inline PartialAct z2_act() {
    return PartialAct(z2(), {{0, U}});
  }

  // Nilpotent monoid act: A = {1, 2} as indices {0, 1}; 1.1 = 1, 2.1 = 2, 2.x = 1.
  inline PartialAct nsub() {
    return PartialAct(nsub_monoid(), {{0, U, U, U}, {1, 0, U, U}});
  }

  // A = {a} over L2 with nothing defined.
  inline PartialAct l2_empty() {
    return PartialAct(l2(), {{U, U}});
  }

}  // namespace globact::fixtures

namespace globact::fixtures {

  // Right zero semigroup {x, y}: st = t.
  inline std::shared_ptr<Semigroup const> r2() {
    return make({{0, 1}, {0, 1}});
  }

  // Null semigroup {z, w}: every product is z.
  inline std::shared_ptr<Semigroup const> n2() {
    return make({{0, 0}, {0, 0}});
  }

  // First unitary strong act over a non-monoid failing (F), from an
  // exhaustive search over |S| <= 3, |A| <= 3: a.x = a.y = a over R2.
  inline PartialAct f_failing() {
    return PartialAct(r2(), {{0, 0}});
  }

  // First singular strong act over a non-monoid from the same search:
  // a.z = a.w = a, b.z = a over N2.
  inline PartialAct singular() {
    return PartialAct(n2(), {{0, 0}, {0, U}});
  }

}  // namespace globact::fixtures
