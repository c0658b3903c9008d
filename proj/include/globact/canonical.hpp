#pragma once

#include <optional>

#include "globact/globalization.hpp"
#include "globact/hom.hpp"
#include "globact/morphism.hpp"
#include "globact/tensor.hpp"

namespace globact {

  // phi: A (x) S -> B, a (x) s -> iota(a) * s, with phi . delta = iota.
  // Requires a firm, strong base and a globalization triple over it.
  Morphism canonical_from_tensor(TensorAct const& T, GlobalizationTriple const& triple);

  // phi: B -> A^S, iota(a) * s -> f_{a,s}, with phi . iota = lambda.
  // Requires a unitary, nonsingular, strong base and an A-generated triple.
  Morphism canonical_to_hom(HomAct const& H, GlobalizationTriple const& triple);

  // The direct map a (x) s -> f_{a,s}.
  Morphism tensor_to_hom(TensorAct const& T, HomAct const& H);

  // Both canonical maps exist, their composite is a (x) s -> f_{a,s}, and the
  // three legs through delta, iota and lambda commute.
  bool check_triangle(TensorAct const& T, HomAct const& H, GlobalizationTriple const& triple);
  bool check_triangle(PartialAct const& A, GlobalizationTriple const& triple);

  // The unique embedding-compatible morphism between two triples whose
  // source is A-generated, or nothing when none exists.
  std::optional<Morphism> compatible_morphism(GlobalizationTriple const& from,
                                              GlobalizationTriple const& to);

  // An invertible embedding-compatible morphism exists.
  bool are_isomorphic_globalizations(GlobalizationTriple const& t1,
                                     GlobalizationTriple const& t2);

}  // namespace globact
