#include "globact/morphism.hpp"

#include <algorithm>
#include <cmath>

#include "globact/error.hpp"

namespace globact {

  Morphism identity_morphism(std::size_t size) {
    Morphism f;
    f.map.resize(size);
    for (index_type i = 0; i < size; ++i) {
      f.map[i] = i;
    }
    return f;
  }

  Morphism compose(Morphism const& g, Morphism const& f) {
    Morphism result;
    result.map.reserve(f.size());
    for (auto x : f.map) {
      result.map.push_back(x == UNDEFINED ? UNDEFINED : g(x));
    }
    return result;
  }

  bool is_injective(Morphism const& f, std::size_t target_size) {
    std::vector<bool> seen(target_size, false);
    for (auto x : f.map) {
      if (x == UNDEFINED) {
        continue;
      }
      if (seen[x]) {
        return false;
      }
      seen[x] = true;
    }
    return true;
  }

  bool is_surjective(Morphism const& f, std::size_t target_size) {
    std::vector<bool> seen(target_size, false);
    for (auto x : f.map) {
      if (x != UNDEFINED) {
        seen[x] = true;
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }

  namespace {
    bool shapes_match(Morphism const& f, PartialAct const& A, PartialAct const& B) {
      if (f.size() != A.size() || !(A.semigroup() == B.semigroup())) {
        return false;
      }
      return std::all_of(f.map.begin(), f.map.end(), [&B](index_type x) {
        return x == UNDEFINED || x < B.size();
      });
    }
  }  // namespace

  bool is_morphism(Morphism const& f, PartialAct const& A, PartialAct const& B) {
    if (!shapes_match(f, A, B)) {
      return false;
    }
    auto const n = A.semigroup().size();
    for (index_type a = 0; a < A.size(); ++a) {
      for (index_type s = 0; s < n; ++s) {
        index_type const as = A.at(a, s);
        if (as == UNDEFINED) {
          continue;
        }
        if (f(a) == UNDEFINED || f(as) == UNDEFINED || B.at(f(a), s) != f(as)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_partial_morphism(Morphism const& f, PartialAct const& A, PartialAct const& B) {
    if (!shapes_match(f, A, B)) {
      return false;
    }
    auto const n = A.semigroup().size();
    for (index_type a = 0; a < A.size(); ++a) {
      for (index_type s = 0; s < n; ++s) {
        index_type const as = A.at(a, s);
        if (as == UNDEFINED || f(a) == UNDEFINED || f(as) == UNDEFINED) {
          continue;
        }
        if (B.at(f(a), s) != f(as)) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    // Depth-first search over the free elements in index order. Every
    // assignment is propagated along the defined products of A, which forces
    // the images of everything reachable from the assigned element.
    class MorphismSearch {
     public:
      MorphismSearch(PartialAct const& A, PartialAct const& B, std::vector<Morphism>& out)
          : _A(A), _B(B), _n(A.semigroup().size()), _out(out) {}

      void run(std::vector<index_type> map) {
        std::vector<index_type> trail;
        for (index_type a = 0; a < map.size(); ++a) {
          if (map[a] != UNDEFINED && !propagate(map, a, trail)) {
            return;
          }
        }
        search(map, 0);
      }

     private:
      bool propagate(std::vector<index_type>& map, index_type start,
                     std::vector<index_type>& trail) {
        std::vector<index_type> queue{start};
        while (!queue.empty()) {
          index_type const a = queue.back();
          queue.pop_back();
          for (index_type s = 0; s < _n; ++s) {
            index_type const as = _A.at(a, s);
            if (as == UNDEFINED) {
              continue;
            }
            index_type const image = _B.at(map[a], s);
            if (image == UNDEFINED) {
              return false;
            }
            if (map[as] == UNDEFINED) {
              map[as] = image;
              trail.push_back(as);
              queue.push_back(as);
            } else if (map[as] != image) {
              return false;
            }
          }
        }
        return true;
      }

      void search(std::vector<index_type>& map, index_type from) {
        while (from < map.size() && map[from] != UNDEFINED) {
          ++from;
        }
        if (from == map.size()) {
          _out.push_back(Morphism{map});
          return;
        }
        for (index_type b = 0; b < _B.size(); ++b) {
          std::vector<index_type> trail;
          map[from] = b;
          if (propagate(map, from, trail)) {
            search(map, from + 1);
          }
          for (auto x : trail) {
            map[x] = UNDEFINED;
          }
        }
        map[from] = UNDEFINED;
      }

      PartialAct const&      _A;
      PartialAct const&      _B;
      std::size_t            _n;
      std::vector<Morphism>& _out;
    };
  }  // namespace

  std::vector<Morphism> enumerate_morphisms(PartialAct const&              A,
                                            PartialAct const&              B,
                                            std::vector<index_type> const& pinned,
                                            std::size_t                    bound) {
    if (!(A.semigroup() == B.semigroup())) {
      throw semigroup_mismatch("SemigroupMismatch: acts are over different semigroups");
    }
    std::vector<index_type> map(A.size(), UNDEFINED);
    if (!pinned.empty()) {
      if (pinned.size() != A.size()) {
        throw index_out_of_range("pinned map has the wrong length");
      }
      map = pinned;
    }
    std::size_t free = 0;
    for (auto x : map) {
      if (x == UNDEFINED) {
        ++free;
      } else if (x >= B.size()) {
        throw index_out_of_range("pinned image is out of range");
      }
    }
    double const space = std::pow(static_cast<double>(B.size()), static_cast<double>(free));
    if (space > static_cast<double>(bound)) {
      throw search_space_too_large("morphism search", space, bound);
    }
    std::vector<Morphism> result;
    MorphismSearch(A, B, result).run(std::move(map));
    std::sort(result.begin(), result.end());
    return result;
  }

}  // namespace globact
