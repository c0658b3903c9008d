#include "globact/canonical.hpp"

#include <limits>

#include "globact/error.hpp"

namespace globact {

  namespace {
    void require_same_base(PartialAct const& A, GlobalizationTriple const& triple) {
      if (!(A == triple.base)) {
        throw semigroup_mismatch("SemigroupMismatch: triple is over a different partial act");
      }
    }

    // Embedding-compatible maps B1 -> B2 fix iota1(a) -> iota2(a).
    std::vector<index_type> pins(GlobalizationTriple const& from,
                                 GlobalizationTriple const& to) {
      std::vector<index_type> pinned(from.B.size(), UNDEFINED);
      for (index_type a = 0; a < from.base.size(); ++a) {
        pinned[from.iota(a)] = to.iota(a);
      }
      return pinned;
    }
  }  // namespace

  Morphism canonical_from_tensor(TensorAct const& T, GlobalizationTriple const& triple) {
    PartialAct const& A = T.base();
    require_same_base(A, triple);
    if (!A.is_strong()) {
      throw not_strong();
    }
    if (!A.is_unitary() || !T.satisfies_f()) {
      throw precondition_failed("firm");
    }
    if (!triple.certificates.is_globalization()) {
      throw not_a_globalization();
    }
    auto const n = A.semigroup().size();
    Morphism   phi{std::vector<index_type>(T.size(), UNDEFINED)};
    for (index_type a = 0; a < A.size(); ++a) {
      for (index_type s = 0; s < n; ++s) {
        index_type const k     = T.class_of(a, s);
        index_type const image = triple.B.at(triple.iota(a), s);
        if (phi.map[k] == UNDEFINED) {
          phi.map[k] = image;
        } else if (phi.map[k] != image) {
          throw well_definedness_failure("canonical map from A (x) S is not well defined");
        }
      }
    }
    if (!is_morphism(phi, T.action().as_partial(), triple.B.as_partial())
        || compose(phi, *T.delta()) != triple.iota) {
      throw well_definedness_failure("canonical map from A (x) S does not commute");
    }
    return phi;
  }

  Morphism canonical_to_hom(HomAct const& H, GlobalizationTriple const& triple) {
    PartialAct const& A = H.base();
    require_same_base(A, triple);
    if (!A.is_unitary()) {
      throw not_unitary();
    }
    if (!H.is_nonsingular()) {
      throw precondition_failed("nonsingular");
    }
    if (!triple.certificates.is_globalization()) {
      throw not_a_globalization();
    }
    if (!triple.certificates.a_generated) {
      throw not_a_generated();
    }
    auto const n = A.semigroup().size();
    Morphism   phi{std::vector<index_type>(triple.B.size(), UNDEFINED)};
    for (index_type a = 0; a < A.size(); ++a) {
      for (index_type s = 0; s < n; ++s) {
        index_type const b     = triple.B.at(triple.iota(a), s);
        index_type const image = H.index_of(a, s);
        if (phi.map[b] == UNDEFINED) {
          phi.map[b] = image;
        } else if (phi.map[b] != image) {
          throw well_definedness_failure("canonical map to A^S is not well defined");
        }
      }
    }
    if (!is_morphism(phi, triple.B.as_partial(), H.action().as_partial())
        || compose(phi, triple.iota) != *H.lambda()) {
      throw well_definedness_failure("canonical map to A^S does not commute");
    }
    return phi;
  }

  Morphism tensor_to_hom(TensorAct const& T, HomAct const& H) {
    Morphism direct;
    for (auto [a, s] : T.representatives()) {
      direct.map.push_back(H.index_of(a, s));
    }
    return direct;
  }

  bool check_triangle(TensorAct const&           T,
                      HomAct const&              H,
                      GlobalizationTriple const& triple) {
    auto const from_tensor = canonical_from_tensor(T, triple);
    auto const to_hom      = canonical_to_hom(H, triple);
    auto const composite   = compose(to_hom, from_tensor);
    return composite == tensor_to_hom(T, H)
           && compose(from_tensor, *T.delta()) == triple.iota
           && compose(to_hom, triple.iota) == *H.lambda()
           && compose(composite, *T.delta()) == *H.lambda()
           && is_morphism(composite, T.action().as_partial(), H.action().as_partial());
  }

  bool check_triangle(PartialAct const& A, GlobalizationTriple const& triple) {
    return check_triangle(TensorAct(A), HomAct(A), triple);
  }

  std::optional<Morphism> compatible_morphism(GlobalizationTriple const& from,
                                              GlobalizationTriple const& to) {
    if (!(from.base == to.base)) {
      throw semigroup_mismatch("SemigroupMismatch: triples are over different partial acts");
    }
    auto found = enumerate_morphisms(from.B.as_partial(),
                                     to.B.as_partial(),
                                     pins(from, to),
                                     std::numeric_limits<std::size_t>::max());
    if (found.empty()) {
      return std::nullopt;
    }
    if (from.certificates.a_generated && found.size() > 1) {
      throw well_definedness_failure("more than one morphism out of an A-generated object");
    }
    return found.front();
  }

  bool are_isomorphic_globalizations(GlobalizationTriple const& t1,
                                     GlobalizationTriple const& t2) {
    if (!(t1.base == t2.base)) {
      throw semigroup_mismatch("SemigroupMismatch: triples are over different partial acts");
    }
    if (t1.B.size() != t2.B.size()) {
      return false;
    }
    if (t1.certificates.a_generated && t2.certificates.a_generated) {
      return compatible_morphism(t1, t2).has_value() && compatible_morphism(t2, t1).has_value();
    }
    auto const candidates = enumerate_morphisms(t1.B.as_partial(),
                                                t2.B.as_partial(),
                                                pins(t1, t2),
                                                std::numeric_limits<std::size_t>::max());
    for (auto const& f : candidates) {
      if (is_injective(f, t2.B.size())) {
        return true;
      }
    }
    return false;
  }

}  // namespace globact
