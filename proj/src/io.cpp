#include "globact/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <string>

#include "globact/error.hpp"

namespace globact {

  namespace {
    json parse_json(std::string_view text) {
      try {
        return json::parse(text.begin(), text.end());
      } catch (json::parse_error const& e) {
        // e.byte is 1-based and may point one past the end of the input.
        std::size_t line = 1, column = 1;
        std::size_t const end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
          if (text[i] == '\n') {
            ++line;
            column = 1;
          } else {
            ++column;
          }
        }
        throw parse_error(e.what(), line, column);
      }
    }

    json const& member(json const& object, char const* key, std::string const& where) {
      if (!object.is_object()) {
        throw schema_error(where, "expected an object");
      }
      auto it = object.find(key);
      if (it == object.end()) {
        throw schema_error(where, std::string("missing key \"") + key + "\"");
      }
      return *it;
    }

    std::size_t read_size(json const& value, std::string const& where) {
      if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw schema_error(where, "expected a non-negative integer");
      }
      return value.get<std::size_t>();
    }

    std::vector<std::string> read_names(json const&        object,
                                        std::size_t        size,
                                        std::string const& where) {
      auto it = object.find("names");
      if (it == object.end()) {
        return {};
      }
      if (!it->is_array() || it->size() != size) {
        throw schema_error(where + "/names", "expected an array of " + std::to_string(size)
                                                 + " strings");
      }
      std::vector<std::string> names;
      for (std::size_t i = 0; i < size; ++i) {
        if (!(*it)[i].is_string()) {
          throw schema_error(where + "/names/" + std::to_string(i), "expected a string");
        }
        names.push_back((*it)[i].get<std::string>());
      }
      return names;
    }

    // rows x cols table of indices in [0, range), nulls allowed if requested.
    std::vector<std::vector<index_type>> read_table(json const&        value,
                                                    std::size_t        rows,
                                                    std::size_t        cols,
                                                    std::size_t        range,
                                                    bool               allow_null,
                                                    std::string const& where) {
      if (!value.is_array() || value.size() != rows) {
        throw schema_error(where, "expected an array of " + std::to_string(rows) + " rows");
      }
      std::vector<std::vector<index_type>> table(rows);
      for (std::size_t r = 0; r < rows; ++r) {
        auto const  row_where = where + "/" + std::to_string(r);
        json const& row       = value[r];
        if (!row.is_array() || row.size() != cols) {
          throw schema_error(row_where,
                             "expected an array of " + std::to_string(cols) + " entries");
        }
        for (std::size_t c = 0; c < cols; ++c) {
          auto const  entry_where = row_where + "/" + std::to_string(c);
          json const& entry       = row[c];
          if (entry.is_null()) {
            if (!allow_null) {
              throw schema_error(entry_where, "null is not allowed here");
            }
            table[r].push_back(UNDEFINED);
          } else if (entry.is_number_integer()) {
            auto const x = entry.get<long long>();
            if (x < 0 || static_cast<std::size_t>(x) >= range) {
              throw index_out_of_range("IndexOutOfRange at " + entry_where + ": "
                                       + std::to_string(x) + " is not in [0, "
                                       + std::to_string(range) + ")");
            }
            table[r].push_back(static_cast<index_type>(x));
          } else {
            throw schema_error(entry_where, "expected an integer");
          }
        }
      }
      return table;
    }

    std::shared_ptr<Semigroup const> read_semigroup(json const&               doc,
                                                    std::vector<std::string>& names) {
      json const& sg   = member(doc, "semigroup", "");
      std::size_t size = read_size(member(sg, "size", "/semigroup"), "/semigroup/size");
      if (size == 0) {
        throw schema_error("/semigroup/size", "a semigroup has at least one element");
      }
      auto table
          = read_table(member(sg, "table", "/semigroup"), size, size, size, false, "/semigroup/table");
      names = read_names(sg, size, "/semigroup");
      return std::make_shared<Semigroup const>(table);
    }

    PartialAct::table_type read_act_table(json const&                      act,
                                          std::shared_ptr<Semigroup const> S,
                                          std::vector<std::string>&        names,
                                          std::size_t&                     size) {
      size       = read_size(member(act, "size", "/act"), "/act/size");
      auto table = read_table(member(act, "table", "/act"), size, S->size(), size, true, "/act/table");
      names      = read_names(act, size, "/act");
      return table;
    }

    json names_or_nothing(json object, std::vector<std::string> const& names) {
      if (!names.empty()) {
        object["names"] = names;
      }
      return object;
    }
  }  // namespace

  ActDocument parse_document(std::string_view text) {
    json const               doc = parse_json(text);
    std::vector<std::string> semigroup_names, act_names;
    auto                     S = read_semigroup(doc, semigroup_names);
    std::size_t              m = 0;
    auto table = read_act_table(member(doc, "act", ""), S, act_names, m);
    PartialAct A(S, m, [&] {
      std::vector<index_type> flat;
      for (auto const& row : table) {
        flat.insert(flat.end(), row.begin(), row.end());
      }
      return flat;
    }());
    return ActDocument{std::move(S), std::move(A), std::move(semigroup_names), std::move(act_names)};
  }

  GlobalizationDocument parse_globalization(std::string_view                        text,
                                            std::shared_ptr<Semigroup const> const& S) {
    json const doc = parse_json(text);
    if (doc.is_object() && doc.contains("semigroup")) {
      std::vector<std::string> ignored;
      if (!(*read_semigroup(doc, ignored) == *S)) {
        throw semigroup_mismatch("SemigroupMismatch: globalization document uses a different "
                                 "semigroup");
      }
    }
    std::vector<std::string> names;
    std::size_t              size  = 0;
    auto                     table = read_act_table(member(doc, "act", ""), S, names, size);
    for (std::size_t b = 0; b < table.size(); ++b) {
      for (std::size_t s = 0; s < S->size(); ++s) {
        if (table[b][s] == UNDEFINED) {
          throw schema_error("/act/table/" + std::to_string(b) + "/" + std::to_string(s),
                             "a globalization must be a global act");
        }
      }
    }
    GlobalAct   B(S, table);
    json const& iota_json = member(doc, "iota", "");
    if (!iota_json.is_array()) {
      throw schema_error("/iota", "expected an array of integers");
    }
    Morphism iota;
    for (std::size_t i = 0; i < iota_json.size(); ++i) {
      auto const where = "/iota/" + std::to_string(i);
      if (!iota_json[i].is_number_integer()) {
        throw schema_error(where, "expected an integer");
      }
      auto const x = iota_json[i].get<long long>();
      if (x < 0 || static_cast<std::size_t>(x) >= size) {
        throw index_out_of_range("IndexOutOfRange at " + where + ": " + std::to_string(x)
                                 + " is not in [0, " + std::to_string(size) + ")");
      }
      iota.map.push_back(static_cast<index_type>(x));
    }
    return GlobalizationDocument{std::move(B), std::move(iota), std::move(names)};
  }

  json semigroup_json(Semigroup const& S, std::vector<std::string> const& names) {
    json object;
    object["size"]  = S.size();
    object["table"] = S.table();
    return names_or_nothing(std::move(object), names);
  }

  json act_json(PartialAct const& A, std::vector<std::string> const& names) {
    json table = json::array();
    for (index_type a = 0; a < A.size(); ++a) {
      json row = json::array();
      for (auto x : A.row(a)) {
        row.push_back(x == UNDEFINED ? json(nullptr) : json(x));
      }
      table.push_back(std::move(row));
    }
    json object;
    object["size"]  = A.size();
    object["table"] = std::move(table);
    return names_or_nothing(std::move(object), names);
  }

  json document_json(PartialAct const&               A,
                     std::vector<std::string> const& semigroup_names,
                     std::vector<std::string> const& act_names) {
    json doc;
    doc["semigroup"] = semigroup_json(A.semigroup(), semigroup_names);
    doc["act"]       = act_json(A, act_names);
    return doc;
  }

  json globalization_json(GlobalizationTriple const&      triple,
                          std::vector<std::string> const& semigroup_names) {
    json doc;
    doc["semigroup"] = semigroup_json(triple.B.semigroup(), semigroup_names);
    doc["act"]       = act_json(triple.B.as_partial());
    doc["iota"]      = triple.iota.map;
    return doc;
  }

  json certificates_json(Certificates const& c) {
    json object;
    object["g1"]          = c.g1;
    object["g2"]          = c.g2;
    object["a_generated"] = c.a_generated;
    return object;
  }

  std::string content_hash(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int  length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
      throw error("SHA-256 computation failed");
    }
    std::string hex;
    char        buffer[3];
    for (unsigned i = 0; i < length; ++i) {
      std::snprintf(buffer, sizeof(buffer), "%02x", digest[i]);
      hex += buffer;
    }
    return hex;
  }

}  // namespace globact
