#pragma once

#include <vector>

#include "globact/morphism.hpp"
#include "globact/partial_act.hpp"
#include "globact/types.hpp"

namespace globact {

  struct Certificates {
    bool g1;           // a.s defined <=> iota(a) * s in iota(A)
    bool g2;           // a.s defined => iota(a.s) = iota(a) * s
    bool a_generated;  // every b is iota(a) * s

    bool is_globalization() const noexcept {
      return g1 && g2;
    }

    bool operator==(Certificates const&) const = default;
  };

  // A candidate globalization (B, iota) of a partial act A together with its
  // certificates. Build with is_globalization.
  struct GlobalizationTriple {
    PartialAct   base;
    GlobalAct    B;
    Morphism     iota;
    Certificates certificates;
  };

  // Throws semigroup_mismatch, index_out_of_range or iota_not_injective.
  GlobalizationTriple is_globalization(PartialAct const& A,
                                       GlobalAct const&  B,
                                       Morphism const&   iota);

  // C = {iota(a) * s} with the inherited action; elements keep their order in
  // B. Throws not_a_globalization or not_unitary.
  GlobalizationTriple a_generated_subact(GlobalizationTriple const& triple);

}  // namespace globact
