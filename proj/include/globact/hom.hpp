#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "globact/globalization.hpp"
#include "globact/morphism.hpp"
#include "globact/partial_act.hpp"
#include "globact/types.hpp"

namespace globact {

  // A partial function S -> A stored densely: value(t) is UNDEFINED outside
  // the domain. The dense array is the canonical form, so equality, ordering
  // and hashing are structural.
  class PartialFn {
   public:
    PartialFn() = default;
    explicit PartialFn(std::vector<index_type> values) : _values(std::move(values)) {}

    // The empty-domain function on a semigroup of the given size.
    static PartialFn zero(std::size_t semigroup_size) {
      return PartialFn(std::vector<index_type>(semigroup_size, UNDEFINED));
    }

    index_type operator()(index_type t) const noexcept {
      return _values[t];
    }

    bool defined(index_type t) const noexcept {
      return _values[t] != UNDEFINED;
    }

    bool is_zero() const noexcept;

    std::vector<index_type> domain() const;

    // The sorted (t, f(t)) pairs.
    std::vector<pair_type> pairs() const;

    std::vector<index_type> const& values() const noexcept {
      return _values;
    }

    bool operator==(PartialFn const&) const  = default;
    auto operator<=>(PartialFn const&) const = default;

   private:
    std::vector<index_type> _values;
  };

  struct PartialFnHash {
    std::size_t operator()(PartialFn const& f) const noexcept;
  };

  // If s, st are in dom(f) then f(s).t is defined and equals f(st).
  bool in_hom_p(PartialFn const& f, PartialAct const& A);

  // f * s: dom = {t : st in dom f}, (f * s)(t) = f(st). Throws not_in_hom_p.
  PartialFn act_on_hom_p(PartialFn const& f, PartialAct const& A, index_type s);

  // f_{a,s}: dom = {t : a.st defined}, f_{a,s}(t) = a.st.
  PartialFn f_as(PartialAct const& A, index_type a, index_type s);

  // lambda_a: dom = {t : a.t defined}, lambda_a(t) = a.t.
  PartialFn lambda_of(PartialAct const& A, index_type a);

  // A^S = {f_{a,s}} under f_{a,s} * t = f_{a,st}. Elements are numbered by
  // their least representative (a, s). lambda is populated only for unitary
  // acts, and the globalization certificate only for unitary, nonsingular
  // acts.
  class HomAct {
   public:
    // Throws not_strong.
    explicit HomAct(PartialAct const& A);

    PartialAct const& base() const noexcept {
      return _base;
    }

    std::size_t size() const noexcept {
      return _elements.size();
    }

    std::vector<PartialFn> const& elements() const noexcept {
      return _elements;
    }

    PartialFn const& element(index_type i) const noexcept {
      return _elements[i];
    }

    pair_type representative(index_type i) const noexcept {
      return _representatives[i];
    }

    // Index of f in the carrier, or UNDEFINED.
    index_type index_of(PartialFn const& f) const;

    // Index of f_{a,s}.
    index_type index_of(index_type a, index_type s) const noexcept {
      return _index_of_pair[a * _base.semigroup().size() + s];
    }

    GlobalAct const& action() const noexcept {
      return *_action;
    }

    std::optional<Morphism> const& lambda() const noexcept {
      return _lambda;
    }

    std::optional<index_type> zero_index() const noexcept {
      return _zero_index;
    }

    bool is_nonsingular() const noexcept {
      return _nonsingular;
    }

    // (A^S, lambda) passed is_globalization with an A-generated certificate.
    bool certified() const noexcept {
      return _certified;
    }

    GlobalizationTriple triple() const;

   private:
    PartialAct                 _base;
    std::vector<PartialFn>     _elements;
    std::vector<pair_type>     _representatives;
    std::vector<index_type>    _index_of_pair;
    std::optional<GlobalAct>   _action;
    std::optional<Morphism>    _lambda;
    std::optional<index_type>  _zero_index;
    bool                       _nonsingular;
    bool                       _certified;
  };

  HomAct build_hom(PartialAct const& A);

  // f_{a,s} = f_{b,t} with a.s defined forces b.t defined and a.s = b.t.
  bool is_nonsingular(PartialAct const& A);

  // The global act A u {c} where undefined products go to c = A.size().
  // Throws not_partially_defined.
  GlobalizationTriple one_point_globalization(PartialAct const& A);

  struct OnePointIsomorphism {
    bool     holds;
    Morphism iso;  // A^S -> A u {c}
  };

  // A^S = lambda(A) u {0}, and f_{a,s} -> a.s, 0 -> c is an isomorphism onto
  // the one-point globalization. Throws precondition_failed.
  OnePointIsomorphism check_isom1(PartialAct const& A);

  struct AdjoinedHomComparison {
    bool        well_defined;
    bool        surjective;
    bool        injective;
    bool        total_on_c;  // C is all of A^{S^1}
    std::size_t hom_size;
    std::size_t adjoined_size;
    std::size_t c_size;
    Morphism    map;  // indexed by A^{S^1}; UNDEFINED outside C
  };

  // The map f_{a,s} -> f_{a,s} from C = {f_{a,s} : s != 1} in A^{S^1} onto
  // A^S. Throws not_strong.
  AdjoinedHomComparison compare_with_adjoined_hom(PartialAct const& A);

  // Every partial map S -> A satisfying the Hom_p law, in lexicographic order
  // of the dense value arrays. Throws search_space_too_large.
  std::vector<PartialFn> enumerate_hom_p(PartialAct const& A,
                                         std::size_t       bound = DEFAULT_BOUND);

}  // namespace globact
