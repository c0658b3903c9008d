#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "globact/globalization.hpp"
#include "globact/partial_act.hpp"
#include "globact/semigroup.hpp"

namespace globact {

  using json = nlohmann::ordered_json;

  // A semigroup and a partial act over it, as read from a document. Names are
  // only used when printing.
  struct ActDocument {
    std::shared_ptr<Semigroup const> semigroup;
    PartialAct                       act;
    std::vector<std::string>         semigroup_names;
    std::vector<std::string>         act_names;
  };

  // A global act B over a known semigroup with an embedding iota of some
  // partial act into it.
  struct GlobalizationDocument {
    GlobalAct                B;
    Morphism                 iota;
    std::vector<std::string> names;
  };

  // Parses
  //   {"semigroup": {"size": n, "table": [[int]], "names": [string]?},
  //    "act": {"size": m, "table": [[int|null]], "names": [string]?}}
  // Other top-level keys are ignored. Throws parse_error (with line and
  // column), schema_error, index_out_of_range, not_associative or
  // pa_violation.
  ActDocument parse_document(std::string_view text);

  // Parses {"semigroup": ...?, "act": {...}, "iota": [int]} for a global act
  // over S; the semigroup, when present, must equal S. Throws as
  // parse_document, plus semigroup_mismatch.
  GlobalizationDocument parse_globalization(std::string_view                        text,
                                            std::shared_ptr<Semigroup const> const& S);

  json semigroup_json(Semigroup const& S, std::vector<std::string> const& names = {});
  json act_json(PartialAct const& A, std::vector<std::string> const& names = {});

  // {"semigroup": ..., "act": ...}; parse_document reads it back.
  json document_json(PartialAct const&               A,
                     std::vector<std::string> const& semigroup_names = {},
                     std::vector<std::string> const& act_names       = {});

  // {"semigroup": ..., "act": ..., "iota": [...]}; parse_globalization reads
  // it back.
  json globalization_json(GlobalizationTriple const&      triple,
                          std::vector<std::string> const& semigroup_names = {});

  json certificates_json(Certificates const& c);

  // Hex SHA-256 of the bytes.
  std::string content_hash(std::string_view bytes);

}  // namespace globact
