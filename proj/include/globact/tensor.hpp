#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "globact/morphism.hpp"
#include "globact/partial_act.hpp"
#include "globact/types.hpp"

namespace globact {

  // A (x) S: the quotient of A x S by the smallest equivalence containing
  // (a, ut) -> (a.u, t), with the global action (a (x) s) * t = a (x) st.
  //
  // Classes are numbered in increasing order of their representative, the
  // lexicographically least pair they contain. delta is populated whenever
  // the base act is unitary; it is only verified to be independent of the
  // chosen decomposition a = b.t when the base act is firm.
  class TensorAct {
   public:
    struct Edge {
      pair_type from;
      pair_type to;
    };

    explicit TensorAct(PartialAct const& A);

    PartialAct const& base() const noexcept {
      return _base;
    }

    std::size_t size() const noexcept {
      return _representatives.size();
    }

    index_type class_of(index_type a, index_type s) const noexcept {
      return _class_of[a * _base.semigroup().size() + s];
    }

    pair_type representative(index_type k) const noexcept {
      return _representatives[k];
    }

    std::vector<pair_type> const& representatives() const noexcept {
      return _representatives;
    }

    std::vector<pair_type> members(index_type k) const;

    GlobalAct const& action() const noexcept {
      return *_action;
    }

    std::optional<Morphism> const& delta() const noexcept {
      return _delta;
    }

    bool delta_verified() const noexcept {
      return _delta_verified;
    }

    // The relation (a, ut) -> (a.u, t), one entry per (a, u, t).
    std::vector<Edge> const& edges() const noexcept {
      return _edges;
    }

    // Condition (F): equal defined products a.s = b.t give equal classes.
    bool satisfies_f() const noexcept {
      return _satisfies_f;
    }

   private:
    PartialAct               _base;
    std::vector<index_type>  _class_of;
    std::vector<pair_type>   _representatives;
    std::optional<GlobalAct> _action;
    std::optional<Morphism>  _delta;
    bool                     _delta_verified;
    bool                     _satisfies_f;
    std::vector<Edge>        _edges;
  };

  TensorAct build_tensor(PartialAct const& A);

  bool tensor_equal(TensorAct const& T, pair_type x, pair_type y);

  // Unitary and (F).
  bool is_firm(PartialAct const& A);

  // mu: B (x) S -> B, b (x) s -> b * s is bijective.
  bool is_firm_global(GlobalAct const& B);

  // T(f): a (x) s -> f(a) (x) s between the tensor acts of source and target.
  Morphism tensor_on_morphism(Morphism const&  f,
                              TensorAct const& source,
                              TensorAct const& target);

  // The unique g: A (x) S -> B with g . delta = f, g(a (x) s) = f(a) * s.
  // Throws precondition_failed naming the missing property.
  Morphism reflection_factor(TensorAct const& TA, GlobalAct const& B, Morphism const& f);

  struct AdjoinedTensorComparison {
    bool        well_defined;
    bool        injective;
    bool        surjective;
    std::size_t tensor_size;
    std::size_t adjoined_size;
    Morphism    map;
  };

  // The map a (x) s -> a (x) s from A (x) S to A (x) S^1. Throws not_strong.
  AdjoinedTensorComparison compare_with_adjoined_tensor(PartialAct const& A);

}  // namespace globact
