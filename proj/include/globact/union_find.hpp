#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "globact/types.hpp"

namespace globact {

  // Disjoint sets over [0, n) with path compression and union by rank.
  class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : _parent(n), _rank(n, 0) {
      std::iota(_parent.begin(), _parent.end(), index_type(0));
    }

    index_type find(index_type x) {
      index_type root = x;
      while (_parent[root] != root) {
        root = _parent[root];
      }
      while (_parent[x] != root) {
        x = std::exchange(_parent[x], root);
      }
      return root;
    }

    // Returns true if x and y were in different sets.
    bool unite(index_type x, index_type y) {
      x = find(x);
      y = find(y);
      if (x == y) {
        return false;
      }
      if (_rank[x] < _rank[y]) {
        std::swap(x, y);
      }
      _parent[y] = x;
      if (_rank[x] == _rank[y]) {
        ++_rank[x];
      }
      return true;
    }

    std::size_t size() const noexcept {
      return _parent.size();
    }

   private:
    std::vector<index_type>    _parent;
    std::vector<unsigned char> _rank;
  };

}  // namespace globact
