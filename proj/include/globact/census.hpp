#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "globact/globalization.hpp"
#include "globact/hom.hpp"
#include "globact/morphism.hpp"
#include "globact/tensor.hpp"

namespace globact {

  inline constexpr std::size_t DEFAULT_CENSUS_BOUND = 12;

  struct CensusObject {
    GlobalizationTriple triple;
    // The act congruence on A (x) S this object is the quotient by: block
    // index of every tensor class.
    std::vector<index_type> congruence;
  };

  struct CensusResult {
    TensorAct                 tensor;
    HomAct                    hom;
    std::vector<CensusObject> objects;
    index_type                initial_index;
    index_type                terminal_index;
    // morphisms[i][j]: the embedding-compatible morphism from object i to
    // object j, if any.
    std::vector<std::vector<std::optional<Morphism>>> morphisms;
  };

  // All A-generated globalizations of A up to isomorphism, as quotients of
  // A (x) S by admissible act congruences. Objects are ordered by size, then
  // by action table and embedding. Requires a firm, nonsingular, strong act;
  // throws search_space_too_large when |A (x) S| exceeds `bound`.
  CensusResult census(PartialAct const& A, std::size_t bound = DEFAULT_CENSUS_BOUND);

  // The admissible congruences of A (x) S in restricted-growth-string order.
  std::vector<std::vector<index_type>> admissible_congruences(TensorAct const& T);

  // The quotient of A (x) S by a congruence, with the induced embedding.
  GlobalizationTriple quotient_globalization(TensorAct const&               T,
                                             std::vector<index_type> const& congruence);

}  // namespace globact
