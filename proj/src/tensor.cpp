#include "globact/tensor.hpp"

#include <string>

#include "globact/error.hpp"
#include "globact/union_find.hpp"

namespace globact {

  TensorAct::TensorAct(PartialAct const& A)
      : _base(A),
        _class_of(),
        _representatives(),
        _action(),
        _delta(),
        _delta_verified(false),
        _satisfies_f(true),
        _edges() {
    auto const& S = A.semigroup();
    auto const  n = static_cast<index_type>(S.size());
    auto const  m = static_cast<index_type>(A.size());

    UnionFind uf(std::size_t(m) * n);
    for (index_type a = 0; a < m; ++a) {
      for (index_type u = 0; u < n; ++u) {
        index_type const au = A.at(a, u);
        if (au == UNDEFINED) {
          continue;
        }
        for (index_type t = 0; t < n; ++t) {
          index_type const ut = S.product(u, t);
          _edges.push_back({{a, ut}, {au, t}});
          uf.unite(a * n + ut, au * n + t);
        }
      }
    }

    _class_of.assign(std::size_t(m) * n, UNDEFINED);
    std::vector<index_type> class_of_root(std::size_t(m) * n, UNDEFINED);
    for (index_type p = 0; p < _class_of.size(); ++p) {
      index_type const root = uf.find(p);
      if (class_of_root[root] == UNDEFINED) {
        class_of_root[root] = static_cast<index_type>(_representatives.size());
        _representatives.emplace_back(p / n, p % n);
      }
      _class_of[p] = class_of_root[root];
    }

    // (a (x) s) * t = a (x) st, checked on every member of every class.
    auto const              k_count = _representatives.size();
    std::vector<index_type> action(k_count * n);
    for (index_type k = 0; k < k_count; ++k) {
      auto const [a, s] = _representatives[k];
      for (index_type t = 0; t < n; ++t) {
        action[k * n + t] = class_of(a, S.product(s, t));
      }
    }
    for (index_type p = 0; p < _class_of.size(); ++p) {
      index_type const a = p / n, s = p % n, k = _class_of[p];
      for (index_type t = 0; t < n; ++t) {
        if (class_of(a, S.product(s, t)) != action[k * n + t]) {
          throw well_definedness_failure("tensor action is not well defined on class "
                                         + std::to_string(k));
        }
      }
    }
    try {
      _action.emplace(PartialAct(A.semigroup_ptr(), k_count, std::move(action)));
    } catch (pa_violation const& e) {
      throw well_definedness_failure(std::string("tensor action violates the action law: ")
                                     + e.what());
    }

    std::vector<index_type> first(m, UNDEFINED);
    for (index_type b = 0; b < m; ++b) {
      for (index_type t = 0; t < n; ++t) {
        index_type const a = A.at(b, t);
        if (a == UNDEFINED) {
          continue;
        }
        if (first[a] == UNDEFINED) {
          first[a] = class_of(b, t);
        } else if (first[a] != class_of(b, t)) {
          _satisfies_f = false;
        }
      }
    }
    if (A.is_unitary()) {
      _delta          = Morphism{std::move(first)};
      _delta_verified = _satisfies_f;
    }
  }

  std::vector<pair_type> TensorAct::members(index_type k) const {
    auto const             n = _base.semigroup().size();
    std::vector<pair_type> result;
    for (index_type p = 0; p < _class_of.size(); ++p) {
      if (_class_of[p] == k) {
        result.emplace_back(p / n, p % n);
      }
    }
    return result;
  }

  TensorAct build_tensor(PartialAct const& A) {
    return TensorAct(A);
  }

  bool tensor_equal(TensorAct const& T, pair_type x, pair_type y) {
    auto const m = T.base().size();
    auto const n = T.base().semigroup().size();
    if (x.first >= m || y.first >= m || x.second >= n || y.second >= n) {
      throw index_out_of_range("pair is out of range");
    }
    return T.class_of(x.first, x.second) == T.class_of(y.first, y.second);
  }

  bool is_firm(PartialAct const& A) {
    bool const firm = A.is_unitary() && TensorAct(A).satisfies_f();
    if (A.semigroup().is_monoid() && firm != A.is_unitary()) {
      throw well_definedness_failure("condition (F) fails over a monoid");
    }
    return firm;
  }

  bool is_firm_global(GlobalAct const& B) {
    TensorAct const T(B.as_partial());
    if (T.size() != B.size()) {
      return false;
    }
    std::vector<bool> hit(B.size(), false);
    for (auto [b, s] : T.representatives()) {
      index_type const x = B.at(b, s);
      if (hit[x]) {
        return false;
      }
      hit[x] = true;
    }
    return true;
  }

  Morphism tensor_on_morphism(Morphism const&  f,
                              TensorAct const& source,
                              TensorAct const& target) {
    if (!is_morphism(f, source.base(), target.base())) {
      throw precondition_failed("morphism",
                                "PreconditionFailed: map is not a morphism of partial acts");
    }
    auto const n = source.base().semigroup().size();
    Morphism   result{std::vector<index_type>(source.size(), UNDEFINED)};
    for (index_type a = 0; a < source.base().size(); ++a) {
      for (index_type s = 0; s < n; ++s) {
        index_type const k     = source.class_of(a, s);
        index_type const image = target.class_of(f(a), s);
        if (result.map[k] == UNDEFINED) {
          result.map[k] = image;
        } else if (result.map[k] != image) {
          throw well_definedness_failure("T(f) is not well defined");
        }
      }
    }
    return result;
  }

  Morphism reflection_factor(TensorAct const& TA, GlobalAct const& B, Morphism const& f) {
    PartialAct const& A = TA.base();
    if (!A.is_strong()) {
      throw not_strong();
    }
    if (!A.is_unitary() || !TA.satisfies_f()) {
      throw precondition_failed("firm");
    }
    if (!is_firm_global(B)) {
      throw precondition_failed("firm_global",
                                "PreconditionFailed: target global act is not firm");
    }
    if (!is_morphism(f, A, B.as_partial())) {
      throw precondition_failed("morphism",
                                "PreconditionFailed: map is not a morphism of partial acts");
    }
    auto const n = A.semigroup().size();
    Morphism   g{std::vector<index_type>(TA.size(), UNDEFINED)};
    for (index_type a = 0; a < A.size(); ++a) {
      for (index_type s = 0; s < n; ++s) {
        index_type const k     = TA.class_of(a, s);
        index_type const image = B.at(f(a), s);
        if (g.map[k] == UNDEFINED) {
          g.map[k] = image;
        } else if (g.map[k] != image) {
          throw well_definedness_failure("reflection factor is not well defined");
        }
      }
    }
    if (!is_morphism(g, TA.action().as_partial(), B.as_partial())
        || compose(g, *TA.delta()) != f) {
      throw well_definedness_failure("reflection factor does not commute with delta");
    }
    return g;
  }

  AdjoinedTensorComparison compare_with_adjoined_tensor(PartialAct const& A) {
    if (!A.is_strong()) {
      throw not_strong();
    }
    TensorAct const T(A);
    TensorAct const T1(adjoin_identity_act(A));
    auto const      n = A.semigroup().size();

    AdjoinedTensorComparison result{true, false, false, T.size(), T1.size(), {}};
    result.map.map.assign(T.size(), UNDEFINED);
    for (index_type a = 0; a < A.size(); ++a) {
      for (index_type s = 0; s < n; ++s) {
        index_type const k     = T.class_of(a, s);
        index_type const image = T1.class_of(a, s);
        if (result.map.map[k] == UNDEFINED) {
          result.map.map[k] = image;
        } else if (result.map.map[k] != image) {
          result.well_defined = false;
        }
      }
    }
    result.injective  = is_injective(result.map, T1.size());
    result.surjective = is_surjective(result.map, T1.size());
    return result;
  }

}  // namespace globact
