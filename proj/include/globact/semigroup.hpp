#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "globact/types.hpp"

namespace globact {

  // A finite semigroup given by its multiplication table. Instances are
  // immutable once validated; the classification flags are computed at
  // construction.
  class Semigroup {
   public:
    using table_type = std::vector<std::vector<index_type>>;

    // Validates the table (range and associativity) and classifies it.
    // Throws index_out_of_range or not_associative.
    explicit Semigroup(table_type const& table);

    std::size_t size() const noexcept {
      return _size;
    }

    index_type product(index_type s, index_type t) const noexcept {
      return _table[s * _size + t];
    }

    std::span<index_type const> row(index_type s) const noexcept {
      return {_table.data() + s * _size, _size};
    }

    std::optional<index_type> identity() const noexcept {
      return _identity;
    }

    bool is_monoid() const noexcept {
      return _identity.has_value();
    }

    bool is_group() const noexcept {
      return _is_group;
    }

    bool is_factorizable() const noexcept {
      return _is_factorizable;
    }

    // Two-sided inverse of s; only meaningful when is_group().
    index_type inverse(index_type s) const;

    table_type table() const;

    std::vector<index_type> const& flat_table() const noexcept {
      return _table;
    }

    bool operator==(Semigroup const& that) const noexcept {
      return _size == that._size && _table == that._table;
    }

   private:
    std::size_t                _size;
    std::vector<index_type>    _table;
    std::optional<index_type>  _identity;
    bool                       _is_group;
    bool                       _is_factorizable;
  };

  Semigroup validate_semigroup(Semigroup::table_type const& table);

  // S^1: S with an external identity adjoined at index S.size(), even when S
  // already has an identity.
  Semigroup adjoin_identity(Semigroup const& S);

}  // namespace globact
