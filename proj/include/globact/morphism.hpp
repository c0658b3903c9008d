#pragma once

#include <cstddef>
#include <vector>

#include "globact/partial_act.hpp"
#include "globact/types.hpp"

namespace globact {

  inline constexpr std::size_t DEFAULT_BOUND = 1'000'000;

  // A map between the carriers of two acts, one target index per source
  // element. Partial morphisms may contain UNDEFINED entries.
  struct Morphism {
    std::vector<index_type> map;

    index_type operator()(index_type a) const noexcept {
      return map[a];
    }

    std::size_t size() const noexcept {
      return map.size();
    }

    bool operator==(Morphism const&) const = default;
    auto operator<=>(Morphism const&) const = default;
  };

  Morphism identity_morphism(std::size_t size);

  // g after f.
  Morphism compose(Morphism const& g, Morphism const& f);

  bool is_injective(Morphism const& f, std::size_t target_size);
  bool is_surjective(Morphism const& f, std::size_t target_size);

  // Whenever a.s is defined in A, f(a).s is defined in B and equals f(a.s).
  bool is_morphism(Morphism const& f, PartialAct const& A, PartialAct const& B);

  // As is_morphism, but only where a.s, f(a) and f(a.s) are all defined.
  bool is_partial_morphism(Morphism const& f, PartialAct const& A, PartialAct const& B);

  // All morphisms A -> B in lexicographic order. Entries of `pinned` other
  // than UNDEFINED fix the image of the corresponding element, and an empty
  // `pinned` fixes nothing. Throws search_space_too_large when |B| raised to
  // the number of free elements exceeds `bound`.
  std::vector<Morphism> enumerate_morphisms(PartialAct const&              A,
                                            PartialAct const&              B,
                                            std::vector<index_type> const& pinned = {},
                                            std::size_t bound = DEFAULT_BOUND);

}  // namespace globact
