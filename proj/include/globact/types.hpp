#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>

namespace globact {

  // Elements of semigroups and acts are 0-based indices into dense tables.
  using index_type = std::uint32_t;

  // Marks an undefined entry of a partial action table.
  inline constexpr index_type UNDEFINED = std::numeric_limits<index_type>::max();

  // An element (a, s) of A x S.
  using pair_type = std::pair<index_type, index_type>;

}  // namespace globact
