#include "globact/catalog.hpp"

#include <algorithm>
#include <numeric>

#include "globact/error.hpp"

namespace globact {

  namespace {
    std::vector<std::vector<index_type>> permutations(std::size_t n) {
      std::vector<index_type> p(n);
      std::iota(p.begin(), p.end(), index_type(0));
      std::vector<std::vector<index_type>> result;
      do {
        result.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      return result;
    }

    // Fills an n x n table cell by cell, checking associativity on every
    // triple whose four products are already known.
    class SemigroupSearch {
     public:
      explicit SemigroupSearch(std::size_t n)
          : _n(n), _table(n * n, UNDEFINED), _perms(permutations(n)) {}

      std::vector<Semigroup> run() {
        search(0);
        std::sort(_found.begin(), _found.end());
        std::vector<Semigroup> result;
        for (auto const& flat : _found) {
          Semigroup::table_type rows(_n);
          for (std::size_t s = 0; s < _n; ++s) {
            rows[s].assign(flat.begin() + s * _n, flat.begin() + (s + 1) * _n);
          }
          result.emplace_back(rows);
        }
        return result;
      }

     private:
      index_type at(index_type s, index_type t) const noexcept {
        return _table[s * _n + t];
      }

      bool associative_so_far() const {
        for (index_type x = 0; x < _n; ++x) {
          for (index_type y = 0; y < _n; ++y) {
            index_type const xy = at(x, y);
            if (xy == UNDEFINED) {
              continue;
            }
            for (index_type z = 0; z < _n; ++z) {
              index_type const yz = at(y, z);
              if (yz == UNDEFINED) {
                continue;
              }
              index_type const lhs = at(xy, z), rhs = at(x, yz);
              if (lhs != UNDEFINED && rhs != UNDEFINED && lhs != rhs) {
                return false;
              }
            }
          }
        }
        return true;
      }

      bool is_canonical() const {
        std::vector<index_type> image(_n * _n);
        for (auto const& p : _perms) {
          for (index_type s = 0; s < _n; ++s) {
            for (index_type t = 0; t < _n; ++t) {
              image[p[s] * _n + p[t]] = p[at(s, t)];
            }
          }
          if (image < _table) {
            return false;
          }
        }
        return true;
      }

      void search(std::size_t cell) {
        if (cell == _table.size()) {
          if (is_canonical()) {
            _found.push_back(_table);
          }
          return;
        }
        for (index_type v = 0; v < _n; ++v) {
          _table[cell] = v;
          if (associative_so_far()) {
            search(cell + 1);
          }
        }
        _table[cell] = UNDEFINED;
      }

      std::size_t                           _n;
      std::vector<index_type>               _table;
      std::vector<std::vector<index_type>>  _perms;
      std::vector<std::vector<index_type>>  _found;
    };

    // Fills an m x n act table cell by cell. Cells hold UNDEFINED or an
    // element; `open` marks cells not yet decided.
    class ActSearch {
     public:
      ActSearch(std::shared_ptr<Semigroup const> const&       S,
                std::size_t                                   m,
                ActFilter                                     filter,
                bool                                          up_to_isomorphism,
                std::function<void(PartialAct const&)> const& visit)
          : _S(S),
            _n(S->size()),
            _m(m),
            _filter(filter),
            _table(m * _n, UNDEFINED),
            _open(m * _n, true),
            _perms(up_to_isomorphism ? permutations(m) : std::vector<std::vector<index_type>>{}),
            _visit(visit) {}

      void run() {
        search(0);
      }

     private:
      bool known(index_type a, index_type s) const noexcept {
        return !_open[a * _n + s];
      }

      index_type at(index_type a, index_type s) const noexcept {
        return _table[a * _n + s];
      }

      bool consistent() const {
        for (index_type a = 0; a < _m; ++a) {
          for (index_type s = 0; s < _n; ++s) {
            if (!known(a, s) || at(a, s) == UNDEFINED) {
              continue;
            }
            index_type const b = at(a, s);
            for (index_type t = 0; t < _n; ++t) {
              index_type const st = _S->product(s, t);
              if (!known(b, t) || !known(a, st)) {
                continue;
              }
              index_type const bt = at(b, t), a_st = at(a, st);
              if (_filter == ActFilter::strong) {
                if (bt != a_st) {
                  return false;
                }
              } else if (bt != UNDEFINED && bt != a_st) {
                return false;
              }
            }
          }
        }
        return true;
      }

      bool is_canonical() const {
        std::vector<index_type> image(_table.size());
        for (auto const& p : _perms) {
          for (index_type a = 0; a < _m; ++a) {
            for (index_type s = 0; s < _n; ++s) {
              index_type const x     = at(a, s);
              image[p[a] * _n + s] = x == UNDEFINED ? UNDEFINED : p[x];
            }
          }
          if (image < _table) {
            return false;
          }
        }
        return true;
      }

      void search(std::size_t cell) {
        if (cell == _table.size()) {
          if (is_canonical()) {
            _visit(PartialAct(_S, _m, _table));
          }
          return;
        }
        _open[cell] = false;
        for (index_type v = 0; v <= _m; ++v) {
          _table[cell] = v == _m ? UNDEFINED : v;
          if (consistent()) {
            search(cell + 1);
          }
        }
        _open[cell]  = true;
        _table[cell] = UNDEFINED;
      }

      std::shared_ptr<Semigroup const>              _S;
      std::size_t                                   _n;
      std::size_t                                   _m;
      ActFilter                                     _filter;
      std::vector<index_type>                       _table;
      std::vector<bool>                             _open;
      std::vector<std::vector<index_type>>          _perms;
      std::function<void(PartialAct const&)> const& _visit;
    };
  }  // namespace

  std::vector<Semigroup> semigroups_of_order(std::size_t n) {
    if (n == 0) {
      return {};
    }
    return SemigroupSearch(n).run();
  }

  std::vector<std::shared_ptr<Semigroup const>> semigroups_up_to(std::size_t n) {
    std::vector<std::shared_ptr<Semigroup const>> result;
    for (std::size_t k = 1; k <= n; ++k) {
      for (auto& S : semigroups_of_order(k)) {
        result.push_back(std::make_shared<Semigroup const>(std::move(S)));
      }
    }
    return result;
  }

  void for_each_act(std::shared_ptr<Semigroup const> const&       S,
                    std::size_t                                   m,
                    ActFilter                                     filter,
                    bool                                          up_to_isomorphism,
                    std::function<void(PartialAct const&)> const& visit) {
    ActSearch(S, m, filter, up_to_isomorphism, visit).run();
  }

  GlobalAct random_global_act(std::shared_ptr<Semigroup const> const& S,
                              std::size_t                             m,
                              std::mt19937_64&                        rng) {
    if (m == 0) {
      return GlobalAct(PartialAct(S, 0, {}));
    }
    auto const              n = S->size();
    std::vector<index_type> table(m * n, UNDEFINED);

    auto consistent = [&]() {
      for (index_type a = 0; a < m; ++a) {
        for (index_type s = 0; s < n; ++s) {
          index_type const b = table[a * n + s];
          if (b == UNDEFINED) {
            continue;
          }
          for (index_type t = 0; t < n; ++t) {
            index_type const bt   = table[b * n + t];
            index_type const a_st = table[a * n + S->product(s, t)];
            if (bt != UNDEFINED && a_st != UNDEFINED && bt != a_st) {
              return false;
            }
          }
        }
      }
      return true;
    };

    std::function<bool(std::size_t)> fill = [&](std::size_t cell) {
      if (cell == table.size()) {
        return true;
      }
      std::vector<index_type> values(m);
      std::iota(values.begin(), values.end(), index_type(0));
      std::shuffle(values.begin(), values.end(), rng);
      for (auto v : values) {
        table[cell] = v;
        if (consistent() && fill(cell + 1)) {
          return true;
        }
      }
      table[cell] = UNDEFINED;
      return false;
    };
    if (!fill(0)) {
      throw well_definedness_failure("no global act found");
    }
    return GlobalAct(PartialAct(S, m, std::move(table)));
  }

}  // namespace globact
