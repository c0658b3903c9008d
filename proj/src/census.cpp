#include "globact/census.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "globact/canonical.hpp"
#include "globact/error.hpp"

namespace globact {

  namespace {
    // Set partitions of the tensor classes as restricted growth strings,
    // pruned as soon as an assigned prefix merges two delta-classes, merges a
    // delta-class with a class outside delta(A) (G1), or is not closed under
    // the action.
    class CongruenceSearch {
     public:
      explicit CongruenceSearch(TensorAct const& T)
          : _K(T.size()),
            _n(T.base().semigroup().size()),
            _act(T.action().as_partial().flat_table()),
            _in_delta(_K, false),
            _preimages(_K),
            _block(_K, UNDEFINED) {
        for (auto k : T.delta()->map) {
          _in_delta[k] = true;
        }
        for (index_type i = 0; i < _K; ++i) {
          for (index_type t = 0; t < _n; ++t) {
            _preimages[image(i, t)].emplace_back(i, t);
          }
        }
      }

      std::vector<std::vector<index_type>> run() {
        if (_K == 0) {
          return {{}};
        }
        search(0, 0);
        return std::move(_found);
      }

     private:
      index_type image(index_type k, index_type t) const noexcept {
        return _act[k * _n + t];
      }

      bool same(index_type x, index_type y, index_type pos) const noexcept {
        return x > pos || y > pos || _block[x] == _block[y];
      }

      bool consistent(index_type pos) const {
        index_type const b = _block[pos];
        for (index_type j = 0; j < pos; ++j) {
          if (_block[j] != b) {
            continue;
          }
          if (_in_delta[j] || _in_delta[pos]) {
            return false;
          }
          for (index_type t = 0; t < _n; ++t) {
            if (!same(image(pos, t), image(j, t), pos)) {
              return false;
            }
          }
        }
        for (auto [i, t] : _preimages[pos]) {
          if (i > pos) {
            continue;
          }
          for (index_type j = 0; j <= pos; ++j) {
            if (j != i && _block[j] == _block[i] && !same(pos, image(j, t), pos)) {
              return false;
            }
          }
        }
        return true;
      }

      void search(index_type pos, index_type blocks) {
        if (pos == _K) {
          _found.push_back(_block);
          return;
        }
        for (index_type b = 0; b <= blocks; ++b) {
          _block[pos] = b;
          if (consistent(pos)) {
            search(pos + 1, std::max(blocks, b + 1));
          }
        }
        _block[pos] = UNDEFINED;
      }

      std::size_t                              _K;
      std::size_t                              _n;
      std::vector<index_type> const&           _act;
      std::vector<bool>                        _in_delta;
      std::vector<std::vector<pair_type>>      _preimages;
      std::vector<index_type>                  _block;
      std::vector<std::vector<index_type>>     _found;
    };

    bool is_congruence(TensorAct const& T, std::vector<index_type> const& block) {
      auto const& act = T.action();
      auto const  n   = T.base().semigroup().size();
      for (index_type i = 0; i < T.size(); ++i) {
        for (index_type j = i + 1; j < T.size(); ++j) {
          if (block[i] != block[j]) {
            continue;
          }
          for (index_type t = 0; t < n; ++t) {
            if (block[act.at(i, t)] != block[act.at(j, t)]) {
              return false;
            }
          }
        }
      }
      return true;
    }

    auto sort_key(CensusObject const& x) {
      return std::make_tuple(x.triple.B.size(),
                             std::cref(x.triple.B.as_partial().flat_table()),
                             std::cref(x.triple.iota.map));
    }
  }  // namespace

  std::vector<std::vector<index_type>> admissible_congruences(TensorAct const& T) {
    if (!T.delta_verified()) {
      throw precondition_failed("firm");
    }
    return CongruenceSearch(T).run();
  }

  GlobalizationTriple quotient_globalization(TensorAct const&               T,
                                             std::vector<index_type> const& congruence) {
    if (congruence.size() != T.size()) {
      throw index_out_of_range("congruence has the wrong length");
    }
    if (!is_congruence(T, congruence)) {
      throw precondition_failed("congruence",
                                "PreconditionFailed: partition is not an act congruence");
    }
    auto const  n = T.base().semigroup().size();
    std::size_t blocks
        = congruence.empty() ? 0 : *std::max_element(congruence.begin(), congruence.end()) + 1;
    std::vector<index_type> flat(blocks * n, UNDEFINED);
    for (index_type k = 0; k < T.size(); ++k) {
      for (index_type t = 0; t < n; ++t) {
        flat[congruence[k] * n + t] = congruence[T.action().at(k, t)];
      }
    }
    GlobalAct B(PartialAct(T.base().semigroup_ptr(), blocks, std::move(flat)));
    Morphism  iota = compose(Morphism{congruence}, *T.delta());
    return is_globalization(T.base(), B, iota);
  }

  CensusResult census(PartialAct const& A, std::size_t bound) {
    if (!A.is_strong()) {
      throw not_strong();
    }
    TensorAct T(A);
    if (!A.is_unitary() || !T.satisfies_f()) {
      throw precondition_failed("firm");
    }
    HomAct H(A);
    if (!H.is_nonsingular()) {
      throw precondition_failed("nonsingular");
    }
    if (T.size() > bound) {
      throw search_space_too_large("census over A (x) S", static_cast<double>(T.size()), bound);
    }

    auto congruences = admissible_congruences(T);
    double const matrix = static_cast<double>(congruences.size()) * congruences.size();
    if (matrix > static_cast<double>(DEFAULT_BOUND)) {
      throw search_space_too_large("census morphism matrix", matrix, DEFAULT_BOUND);
    }
    std::vector<CensusObject> objects;
    for (auto& congruence : congruences) {
      auto triple = quotient_globalization(T, congruence);
      if (!triple.certificates.is_globalization()) {
        continue;
      }
      if (!triple.certificates.a_generated) {
        throw well_definedness_failure("quotient of A (x) S is not A-generated");
      }
      objects.push_back({std::move(triple), std::move(congruence)});
    }
    std::sort(objects.begin(), objects.end(), [](auto const& x, auto const& y) {
      return sort_key(x) < sort_key(y);
    });
    for (std::size_t i = 0; i < objects.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (are_isomorphic_globalizations(objects[i].triple, objects[j].triple)) {
          throw well_definedness_failure("distinct congruences gave isomorphic objects");
        }
      }
    }

    auto const tensor_triple = is_globalization(A, T.action(), *T.delta());
    auto const hom_triple    = H.triple();
    CensusResult result{std::move(T), std::move(H), std::move(objects), UNDEFINED, UNDEFINED, {}};
    auto const   count = result.objects.size();
    for (index_type i = 0; i < count; ++i) {
      auto const& triple = result.objects[i].triple;
      if (are_isomorphic_globalizations(triple, tensor_triple)) {
        result.initial_index = i;
      }
      if (are_isomorphic_globalizations(triple, hom_triple)) {
        result.terminal_index = i;
      }
    }
    if (result.initial_index == UNDEFINED || result.terminal_index == UNDEFINED) {
      throw well_definedness_failure("census lacks an initial or terminal object");
    }

    result.morphisms.assign(count, std::vector<std::optional<Morphism>>(count));
    for (index_type i = 0; i < count; ++i) {
      auto const& from = result.objects[i];
      for (index_type j = 0; j < count; ++j) {
        auto const& to = result.objects[j];
        std::optional<Morphism> phi;
        if (i == result.initial_index) {
          // The initial object is A (x) S itself; the canonical map sends the
          // class of k to its block in `to`.
          auto const from_tensor = canonical_from_tensor(result.tensor, to.triple);
          phi = Morphism{std::vector<index_type>(from.triple.B.size(), UNDEFINED)};
          for (index_type k = 0; k < result.tensor.size(); ++k) {
            phi->map[from.congruence[k]] = from_tensor(k);
          }
        } else if (j == result.terminal_index) {
          // Through A^S and back along the terminal isomorphism.
          auto const to_hom = canonical_to_hom(result.hom, from.triple);
          auto const iso    = compatible_morphism(to.triple, hom_triple);
          std::vector<index_type> inverse(iso->size());
          for (index_type x = 0; x < iso->size(); ++x) {
            inverse[(*iso)(x)] = x;
          }
          phi = compose(Morphism{std::move(inverse)}, to_hom);
        } else {
          phi = compatible_morphism(from.triple, to.triple);
        }
        if (phi
            && (!is_morphism(*phi, from.triple.B.as_partial(), to.triple.B.as_partial())
                || compose(*phi, from.triple.iota) != to.triple.iota)) {
          throw well_definedness_failure("census morphism is not embedding-compatible");
        }
        result.morphisms[i][j] = std::move(phi);
      }
    }
    return result;
  }

}  // namespace globact
