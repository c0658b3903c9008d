#include "globact/partial_act.hpp"

#include <string>
#include <utility>

#include "globact/error.hpp"

namespace globact {

  namespace {
    std::shared_ptr<Semigroup const> require(std::shared_ptr<Semigroup const> S) {
      if (S == nullptr) {
        throw std::invalid_argument("partial act requires a semigroup");
      }
      return S;
    }
  }  // namespace

  PartialAct::PartialAct(std::shared_ptr<Semigroup const> S, table_type const& table)
      : _semigroup(require(std::move(S))), _size(table.size()), _table(), _conditions() {
    std::size_t const n = _semigroup->size();
    _table.reserve(_size * n);
    for (std::size_t a = 0; a < _size; ++a) {
      if (table[a].size() != n) {
        throw index_out_of_range("act table row " + std::to_string(a) + " has length "
                                 + std::to_string(table[a].size()) + ", expected "
                                 + std::to_string(n));
      }
      _table.insert(_table.end(), table[a].begin(), table[a].end());
    }
    validate();
  }

  PartialAct::PartialAct(std::shared_ptr<Semigroup const> S,
                         std::size_t                      m,
                         std::vector<index_type>          flat)
      : _semigroup(require(std::move(S))), _size(m), _table(std::move(flat)), _conditions() {
    if (_table.size() != _size * _semigroup->size()) {
      throw index_out_of_range("act table has " + std::to_string(_table.size())
                               + " entries, expected "
                               + std::to_string(_size * _semigroup->size()));
    }
    validate();
  }

  void PartialAct::validate() {
    auto const& S = *_semigroup;
    auto const  n = static_cast<index_type>(S.size());
    auto const  m = static_cast<index_type>(_size);
    for (std::size_t i = 0; i < _table.size(); ++i) {
      if (_table[i] != UNDEFINED && _table[i] >= m) {
        throw index_out_of_range("act table entry [" + std::to_string(i / n) + "]["
                                 + std::to_string(i % n) + "] is out of range");
      }
    }

    // (PA): if a.s and (a.s).t are defined then a.st is defined and equal.
    for (index_type a = 0; a < m; ++a) {
      for (index_type s = 0; s < n; ++s) {
        index_type const as = at(a, s);
        if (as == UNDEFINED) {
          continue;
        }
        for (index_type t = 0; t < n; ++t) {
          index_type const ast = at(as, t);
          if (ast != UNDEFINED && at(a, S.product(s, t)) != ast) {
            throw pa_violation(a, s, t);
          }
        }
      }
    }

    ActConditions& c    = _conditions;
    c.pa                = true;
    c.strong            = true;
    c.partially_defined = true;
    c.empty             = (m == 0);
    c.global            = true;
    for (auto x : _table) {
      if (x == UNDEFINED) {
        c.global = false;
        break;
      }
    }

    for (index_type a = 0; a < m; ++a) {
      for (index_type s = 0; s < n; ++s) {
        index_type const as = at(a, s);
        for (index_type t = 0; t < n; ++t) {
          index_type const a_st = at(a, S.product(s, t));
          index_type const as_t = as == UNDEFINED ? UNDEFINED : at(as, t);
          // (S): a.s and a.st defined => (a.s).t defined and equal.
          if (as != UNDEFINED && a_st != UNDEFINED && as_t != a_st) {
            c.strong = false;
          }
          // a.s and (a.s).t defined <=> a.st defined.
          if ((as_t != UNDEFINED) != (a_st != UNDEFINED)) {
            c.partially_defined = false;
          }
        }
      }
    }

    std::vector<bool> reached(m, false);
    for (auto x : _table) {
      if (x != UNDEFINED) {
        reached[x] = true;
      }
    }
    c.unitary = true;
    for (index_type a = 0; a < m; ++a) {
      c.unitary = c.unitary && reached[a];
    }

    if (auto e = S.identity()) {
      bool um = true;
      for (index_type a = 0; a < m; ++a) {
        um = um && at(a, *e) == a;
      }
      c.um = um;
    }

    if (S.is_group()) {
      bool holds = true;
      for (index_type g = 0; g < n; ++g) {
        index_type const g_inv = S.inverse(g);
        for (index_type a = 0; a < m; ++a) {
          index_type const ag = at(a, g);
          if (ag != UNDEFINED && at(ag, g_inv) != a) {
            holds = false;
          }
        }
      }
      c.inverse_condition = holds;
    }
  }

  PartialAct::table_type PartialAct::table() const {
    table_type result(_size);
    for (index_type a = 0; a < _size; ++a) {
      auto r = row(a);
      result[a].assign(r.begin(), r.end());
    }
    return result;
  }

  GlobalAct::GlobalAct(PartialAct act) : _act(std::move(act)) {
    if (!_act.is_global()) {
      throw precondition_failed("global", "PreconditionFailed: act is not global (total)");
    }
  }

  GlobalAct::GlobalAct(std::shared_ptr<Semigroup const> S, PartialAct::table_type const& table)
      : GlobalAct(PartialAct(std::move(S), table)) {}

  PartialAct validate_partial_act(std::shared_ptr<Semigroup const> S,
                                  PartialAct::table_type const&    table) {
    return PartialAct(std::move(S), table);
  }

  ActConditions check_conditions(PartialAct const& A) {
    return A.conditions();
  }

  PartialAct restrict(GlobalAct const& B, std::span<index_type const> subset) {
    if (subset.empty()) {
      throw empty_subset();
    }
    std::vector<index_type> position(B.size(), UNDEFINED);
    for (index_type i = 0; i < subset.size(); ++i) {
      if (subset[i] >= B.size()) {
        throw index_out_of_range("subset element " + std::to_string(subset[i])
                                 + " is out of range");
      }
      if (position[subset[i]] != UNDEFINED) {
        throw index_out_of_range("subset element " + std::to_string(subset[i])
                                 + " is repeated");
      }
      position[subset[i]] = i;
    }
    auto const              n = B.semigroup().size();
    std::vector<index_type> flat;
    flat.reserve(subset.size() * n);
    for (auto b : subset) {
      for (index_type s = 0; s < n; ++s) {
        flat.push_back(position[B.at(b, s)]);
      }
    }
    PartialAct result(B.as_partial().semigroup_ptr(), subset.size(), std::move(flat));
    if (!result.is_strong()) {
      throw well_definedness_failure("restriction of a global act is not strong");
    }
    return result;
  }

  PartialAct adjoin_identity_act(PartialAct const& A) {
    if (!A.is_strong()) {
      throw not_strong();
    }
    auto       S1 = std::make_shared<Semigroup const>(adjoin_identity(A.semigroup()));
    auto const n  = A.semigroup().size();
    std::vector<index_type> flat;
    flat.reserve(A.size() * (n + 1));
    for (index_type a = 0; a < A.size(); ++a) {
      auto r = A.row(a);
      flat.insert(flat.end(), r.begin(), r.end());
      flat.push_back(a);
    }
    PartialAct result(std::move(S1), A.size(), std::move(flat));
    if (!result.is_strong() || !result.is_unitary()) {
      throw well_definedness_failure("adjoined identity act is not strong and unitary");
    }
    return result;
  }

  GlobalAct right_regular_act(std::shared_ptr<Semigroup const> S) {
    auto const& table = S->flat_table();
    auto const  n     = S->size();
    return GlobalAct(PartialAct(std::move(S), n, table));
  }

}  // namespace globact
