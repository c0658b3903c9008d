#pragma once

// Brute-force reference computations for the tests. Nothing here uses the
// library's union-find, hashing or search code; everything is computed from
// the definitions with plain loops.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "globact/partial_act.hpp"

namespace globact::oracle {

  // rho-class of every pair (a, s), indexed a * n + s, as the least pair
  // index in its class. Reflexive-symmetric-transitive closure of
  // (a, s) -> (b, t) iff s = ut and a.u = b for some u, by Warshall.
  inline std::vector<std::size_t> tensor_partition(PartialAct const& A) {
    auto const&       S = A.semigroup();
    std::size_t const n = S.size(), P = A.size() * n;
    std::vector<std::vector<bool>> R(P, std::vector<bool>(P, false));
    for (std::size_t p = 0; p < P; ++p) {
      R[p][p] = true;
      for (std::size_t q = 0; q < P; ++q) {
        index_type const a = p / n, s = p % n, b = q / n, t = q % n;
        for (index_type u = 0; u < n; ++u) {
          if (S.product(u, t) == s && A.at(a, u) == b) {
            R[p][q] = R[q][p] = true;
          }
        }
      }
    }
    for (std::size_t k = 0; k < P; ++k) {
      for (std::size_t i = 0; i < P; ++i) {
        if (!R[i][k]) {
          continue;
        }
        for (std::size_t j = 0; j < P; ++j) {
          if (R[k][j]) {
            R[i][j] = true;
          }
        }
      }
    }
    std::vector<std::size_t> least(P);
    for (std::size_t p = 0; p < P; ++p) {
      least[p] = p;
      for (std::size_t q = 0; q < p; ++q) {
        if (R[p][q]) {
          least[p] = q;
          break;
        }
      }
    }
    return least;
  }

  inline std::size_t tensor_size(PartialAct const& A) {
    auto const  least = tensor_partition(A);
    std::size_t count = 0;
    for (std::size_t p = 0; p < least.size(); ++p) {
      count += least[p] == p;
    }
    return count;
  }

  // f_{a,s} as an ordered map t -> a.st over its domain.
  inline std::map<index_type, index_type> f_as(PartialAct const& A, index_type a, index_type s) {
    std::map<index_type, index_type> f;
    for (index_type t = 0; t < A.semigroup().size(); ++t) {
      index_type const x = A.at(a, A.semigroup().product(s, t));
      if (x != UNDEFINED) {
        f[t] = x;
      }
    }
    return f;
  }

  // Number of distinct f_{a,s}, by pairwise comparison.
  inline std::size_t hom_size(PartialAct const& A) {
    std::vector<std::map<index_type, index_type>> all;
    for (index_type a = 0; a < A.size(); ++a) {
      for (index_type s = 0; s < A.semigroup().size(); ++s) {
        all.push_back(oracle::f_as(A, a, s));
      }
    }
    std::size_t distinct = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
      bool seen = false;
      for (std::size_t j = 0; j < i && !seen; ++j) {
        seen = all[i] == all[j];
      }
      distinct += !seen;
    }
    return distinct;
  }

  // Calls visit(map) for every map [0, from) -> [0, to), lexicographically.
  inline void for_each_map(std::size_t                                            from,
                           std::size_t                                            to,
                           std::function<void(std::vector<index_type> const&)> const& visit) {
    if (from > 0 && to == 0) {
      return;
    }
    std::vector<index_type> map(from, 0);
    while (true) {
      visit(map);
      std::size_t pos = from;
      while (pos > 0 && map[pos - 1] + 1 == to) {
        map[--pos] = 0;
      }
      if (pos == 0) {
        return;
      }
      ++map[pos - 1];
    }
  }

  // Every morphism A -> B by testing all |B|^|A| maps.
  inline std::vector<std::vector<index_type>> morphisms(PartialAct const& A, PartialAct const& B) {
    std::vector<std::vector<index_type>> result;
    for_each_map(A.size(), B.size(), [&](std::vector<index_type> const& f) {
      for (index_type a = 0; a < A.size(); ++a) {
        for (index_type s = 0; s < A.semigroup().size(); ++s) {
          index_type const as = A.at(a, s);
          if (as != UNDEFINED && B.at(f[a], s) != f[as]) {
            return;
          }
        }
      }
      result.push_back(f);
    });
    return result;
  }

  // Every set partition of [0, k) as a block-label vector (restricted growth
  // strings), generated without pruning.
  inline std::vector<std::vector<index_type>> set_partitions(std::size_t k) {
    std::vector<std::vector<index_type>> result;
    std::vector<index_type>              rgs(k, 0);
    std::function<void(std::size_t, index_type)> rec = [&](std::size_t pos, index_type max) {
      if (pos == k) {
        result.push_back(rgs);
        return;
      }
      for (index_type b = 0; b <= max + 1 && (pos > 0 || b == 0); ++b) {
        rgs[pos] = b;
        rec(pos + 1, std::max<index_type>(max, b));
      }
    };
    if (k == 0) {
      return {{}};
    }
    rgs[0] = 0;
    rec(1, 0);
    return result;
  }

  // Number of A-generated globalizations of a firm strong act, counted as the
  // partitions theta of the tensor classes (from tensor_partition) that are
  // compatible with the action and whose quotient with embedding
  // a -> [delta(a)] satisfies injectivity, (G1) and (G2).
  inline std::size_t census_size(PartialAct const& A) {
    auto const& S     = A.semigroup();
    auto const  n     = S.size();
    auto const  least = tensor_partition(A);
    std::vector<std::size_t> classes;
    for (std::size_t p = 0; p < least.size(); ++p) {
      if (least[p] == p) {
        classes.push_back(p);
      }
    }
    auto class_index = [&](index_type a, index_type s) {
      auto const rep = least[a * n + s];
      return static_cast<index_type>(std::find(classes.begin(), classes.end(), rep)
                                     - classes.begin());
    };
    auto act = [&](index_type k, index_type t) {
      index_type const a = classes[k] / n, s = classes[k] % n;
      return class_index(a, S.product(s, t));
    };
    std::vector<index_type> delta(A.size());
    for (index_type a = 0; a < A.size(); ++a) {
      for (index_type b = 0; b < A.size(); ++b) {
        for (index_type t = 0; t < n; ++t) {
          if (A.at(b, t) == a) {
            delta[a] = class_index(b, t);
          }
        }
      }
    }
    std::size_t count = 0;
    for (auto const& theta : set_partitions(classes.size())) {
      bool ok = true;
      for (index_type i = 0; i < classes.size() && ok; ++i) {
        for (index_type j = 0; j < classes.size() && ok; ++j) {
          for (index_type t = 0; t < n && ok; ++t) {
            ok = theta[i] != theta[j] || theta[act(i, t)] == theta[act(j, t)];
          }
        }
      }
      for (index_type a = 0; a < A.size() && ok; ++a) {
        for (index_type b = 0; b < a && ok; ++b) {
          ok = theta[delta[a]] != theta[delta[b]];
        }
        for (index_type s = 0; s < n && ok; ++s) {
          index_type const image = theta[act(delta[a], s)];
          bool             in_iota_a = false;
          for (index_type b = 0; b < A.size(); ++b) {
            in_iota_a = in_iota_a || theta[delta[b]] == image;
          }
          ok = in_iota_a == A.defined(a, s)
               && (!A.defined(a, s) || theta[delta[A.at(a, s)]] == image);
        }
      }
      count += ok;
    }
    return count;
  }

}  // namespace globact::oracle
