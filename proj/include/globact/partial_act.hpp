#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "globact/semigroup.hpp"
#include "globact/types.hpp"

namespace globact {

  // Which of the per-act axioms hold. Conditions that only make sense for
  // monoids or groups are empty otherwise.
  struct ActConditions {
    bool                pa;
    bool                strong;
    bool                unitary;
    std::optional<bool> um;
    bool                partially_defined;
    std::optional<bool> inverse_condition;
    bool                global;
    bool                empty;
  };

  // A finite right partial act of a semigroup: an m x n table whose entries
  // are indices in [0, m) or UNDEFINED. Construction verifies (PA); all other
  // conditions are decided once at construction and cached.
  class PartialAct {
   public:
    using table_type = std::vector<std::vector<index_type>>;

    // Throws index_out_of_range or pa_violation.
    PartialAct(std::shared_ptr<Semigroup const> S, table_type const& table);
    PartialAct(std::shared_ptr<Semigroup const> S, std::size_t m, std::vector<index_type> flat);

    Semigroup const& semigroup() const noexcept {
      return *_semigroup;
    }

    std::shared_ptr<Semigroup const> const& semigroup_ptr() const noexcept {
      return _semigroup;
    }

    std::size_t size() const noexcept {
      return _size;
    }

    // a . s, or UNDEFINED.
    index_type at(index_type a, index_type s) const noexcept {
      return _table[a * _semigroup->size() + s];
    }

    bool defined(index_type a, index_type s) const noexcept {
      return at(a, s) != UNDEFINED;
    }

    std::span<index_type const> row(index_type a) const noexcept {
      return {_table.data() + a * _semigroup->size(), _semigroup->size()};
    }

    std::vector<index_type> const& flat_table() const noexcept {
      return _table;
    }

    table_type table() const;

    ActConditions const& conditions() const noexcept {
      return _conditions;
    }

    bool is_strong() const noexcept {
      return _conditions.strong;
    }

    bool is_unitary() const noexcept {
      return _conditions.unitary;
    }

    bool is_partially_defined() const noexcept {
      return _conditions.partially_defined;
    }

    bool is_global() const noexcept {
      return _conditions.global;
    }

    bool operator==(PartialAct const& that) const noexcept {
      return _size == that._size && _table == that._table
             && *_semigroup == *that._semigroup;
    }

   private:
    void validate();

    std::shared_ptr<Semigroup const> _semigroup;
    std::size_t                      _size;
    std::vector<index_type>          _table;
    ActConditions                    _conditions;
  };

  // A partial act whose table is total, i.e. a global act.
  class GlobalAct {
   public:
    // Throws precondition_failed("global") when some entry is undefined.
    explicit GlobalAct(PartialAct act);
    GlobalAct(std::shared_ptr<Semigroup const> S, PartialAct::table_type const& table);

    PartialAct const& as_partial() const noexcept {
      return _act;
    }

    Semigroup const& semigroup() const noexcept {
      return _act.semigroup();
    }

    std::size_t size() const noexcept {
      return _act.size();
    }

    index_type at(index_type b, index_type s) const noexcept {
      return _act.at(b, s);
    }

    bool operator==(GlobalAct const& that) const noexcept {
      return _act == that._act;
    }

   private:
    PartialAct _act;
  };

  PartialAct validate_partial_act(std::shared_ptr<Semigroup const> S,
                                  PartialAct::table_type const&    table);

  ActConditions check_conditions(PartialAct const& A);

  // Restriction of a global act to a nonempty subset; element i of the result
  // is subset[i]. Throws empty_subset or index_out_of_range.
  PartialAct restrict(GlobalAct const& B, std::span<index_type const> subset);

  // The partial S^1-act obtained by letting the external identity act
  // trivially. Throws not_strong.
  PartialAct adjoin_identity_act(PartialAct const& A);

  // S acting on itself by right multiplication.
  GlobalAct right_regular_act(std::shared_ptr<Semigroup const> S);

}  // namespace globact
