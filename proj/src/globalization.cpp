#include "globact/globalization.hpp"

#include <string>

#include "globact/error.hpp"

namespace globact {

  GlobalizationTriple is_globalization(PartialAct const& A,
                                       GlobalAct const&  B,
                                       Morphism const&   iota) {
    if (!(A.semigroup() == B.semigroup())) {
      throw semigroup_mismatch("SemigroupMismatch: act and globalization use different "
                               "semigroups");
    }
    if (iota.size() != A.size()) {
      throw index_out_of_range("iota has " + std::to_string(iota.size())
                               + " entries, expected " + std::to_string(A.size()));
    }
    std::vector<index_type> preimage(B.size(), UNDEFINED);
    for (index_type a = 0; a < A.size(); ++a) {
      if (iota(a) >= B.size()) {
        throw index_out_of_range("iota(" + std::to_string(a) + ") is out of range");
      }
      if (preimage[iota(a)] != UNDEFINED) {
        throw iota_not_injective(preimage[iota(a)], a);
      }
      preimage[iota(a)] = a;
    }

    auto const   n = A.semigroup().size();
    Certificates c{true, true, true};
    for (index_type a = 0; a < A.size(); ++a) {
      for (index_type s = 0; s < n; ++s) {
        index_type const image   = B.at(iota(a), s);
        bool const       defined = A.defined(a, s);
        if (defined != (preimage[image] != UNDEFINED)) {
          c.g1 = false;
        }
        if (defined && iota(A.at(a, s)) != image) {
          c.g2 = false;
        }
      }
    }

    std::vector<bool> generated(B.size(), false);
    for (index_type a = 0; a < A.size(); ++a) {
      for (index_type s = 0; s < n; ++s) {
        generated[B.at(iota(a), s)] = true;
      }
    }
    for (bool g : generated) {
      c.a_generated = c.a_generated && g;
    }
    return GlobalizationTriple{A, B, iota, c};
  }

  GlobalizationTriple a_generated_subact(GlobalizationTriple const& triple) {
    if (!triple.certificates.is_globalization()) {
      throw not_a_globalization();
    }
    PartialAct const& A = triple.base;
    GlobalAct const&  B = triple.B;
    if (!A.is_unitary()) {
      throw not_unitary();
    }
    auto const        n = A.semigroup().size();
    std::vector<bool> in_c(B.size(), false);
    for (index_type a = 0; a < A.size(); ++a) {
      for (index_type s = 0; s < n; ++s) {
        in_c[B.at(triple.iota(a), s)] = true;
      }
    }
    std::vector<index_type> position(B.size(), UNDEFINED);
    std::vector<index_type> elements;
    for (index_type b = 0; b < B.size(); ++b) {
      if (in_c[b]) {
        position[b] = static_cast<index_type>(elements.size());
        elements.push_back(b);
      }
    }
    std::vector<index_type> flat;
    for (auto b : elements) {
      for (index_type s = 0; s < n; ++s) {
        index_type const x = position[B.at(b, s)];
        if (x == UNDEFINED) {
          throw well_definedness_failure("A-generated part is not a subact");
        }
        flat.push_back(x);
      }
    }
    GlobalAct C(PartialAct(B.as_partial().semigroup_ptr(), elements.size(), std::move(flat)));
    Morphism  iota;
    for (auto x : triple.iota.map) {
      iota.map.push_back(position[x]);
    }
    auto result = is_globalization(A, C, iota);
    if (!result.certificates.is_globalization() || !result.certificates.a_generated) {
      throw well_definedness_failure("A-generated subact is not an A-generated globalization");
    }
    return result;
  }

}  // namespace globact
