#include "globact/semigroup.hpp"

#include <algorithm>
#include <string>

#include "globact/error.hpp"

namespace globact {

  Semigroup::Semigroup(table_type const& table)
      : _size(table.size()), _table(), _identity(), _is_group(false), _is_factorizable(false) {
    if (_size == 0) {
      throw index_out_of_range("semigroup table must have at least one row");
    }
    _table.reserve(_size * _size);
    for (std::size_t s = 0; s < _size; ++s) {
      if (table[s].size() != _size) {
        throw index_out_of_range("semigroup table row " + std::to_string(s) + " has length "
                                 + std::to_string(table[s].size()) + ", expected "
                                 + std::to_string(_size));
      }
      for (std::size_t t = 0; t < _size; ++t) {
        if (table[s][t] >= _size) {
          throw index_out_of_range("semigroup table entry [" + std::to_string(s) + "]["
                                   + std::to_string(t) + "] is out of range");
        }
        _table.push_back(table[s][t]);
      }
    }

    for (index_type s = 0; s < _size; ++s) {
      for (index_type t = 0; t < _size; ++t) {
        index_type const st = product(s, t);
        for (index_type u = 0; u < _size; ++u) {
          if (product(st, u) != product(s, product(t, u))) {
            throw not_associative(s, t, u);
          }
        }
      }
    }

    for (index_type e = 0; e < _size && !_identity; ++e) {
      bool is_identity = true;
      for (index_type s = 0; s < _size && is_identity; ++s) {
        is_identity = product(e, s) == s && product(s, e) == s;
      }
      if (is_identity) {
        _identity = e;
      }
    }

    // Group iff monoid and every row and column is a permutation.
    if (_identity) {
      _is_group = true;
      std::vector<bool> row_seen(_size), col_seen(_size);
      for (index_type s = 0; s < _size && _is_group; ++s) {
        std::fill(row_seen.begin(), row_seen.end(), false);
        std::fill(col_seen.begin(), col_seen.end(), false);
        for (index_type t = 0; t < _size; ++t) {
          row_seen[product(s, t)] = true;
          col_seen[product(t, s)] = true;
        }
        for (index_type t = 0; t < _size; ++t) {
          if (!row_seen[t] || !col_seen[t]) {
            _is_group = false;
            break;
          }
        }
      }
    }

    std::vector<bool> is_product(_size, false);
    for (auto x : _table) {
      is_product[x] = true;
    }
    _is_factorizable = std::find(is_product.begin(), is_product.end(), false) == is_product.end();
  }

  index_type Semigroup::inverse(index_type s) const {
    if (!_identity) {
      throw precondition_failed("monoid");
    }
    for (index_type t = 0; t < _size; ++t) {
      if (product(s, t) == *_identity && product(t, s) == *_identity) {
        return t;
      }
    }
    throw precondition_failed("group", "element " + std::to_string(s) + " has no inverse");
  }

  Semigroup::table_type Semigroup::table() const {
    table_type result(_size);
    for (index_type s = 0; s < _size; ++s) {
      auto r = row(s);
      result[s].assign(r.begin(), r.end());
    }
    return result;
  }

  Semigroup validate_semigroup(Semigroup::table_type const& table) {
    return Semigroup(table);
  }

  Semigroup adjoin_identity(Semigroup const& S) {
    auto const n     = static_cast<index_type>(S.size());
    auto       table = S.table();
    for (index_type s = 0; s < n; ++s) {
      table[s].push_back(s);
    }
    std::vector<index_type> last(n + 1);
    for (index_type s = 0; s <= n; ++s) {
      last[s] = s;
    }
    table.push_back(std::move(last));
    return Semigroup(table);
  }

}  // namespace globact
