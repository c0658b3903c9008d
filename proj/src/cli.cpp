#include "globact/cli.hpp"

#include <functional>
#include <map>

#include "globact/canonical.hpp"
#include "globact/census.hpp"
#include "globact/error.hpp"
#include "globact/hom.hpp"
#include "globact/tensor.hpp"

namespace globact {

  namespace {
    struct Context {
      ActDocument                       doc;
      std::string                       input_hash;
      std::optional<std::string> const& globalization;
      std::size_t                       bound;
    };

    std::string name_of(std::vector<std::string> const& names, index_type i) {
      return i < names.size() ? names[i] : std::to_string(i);
    }

    json nullable(std::optional<bool> x) {
      return x ? json(*x) : json(nullptr);
    }

    json map_json(std::optional<Morphism> const& f) {
      return f ? json(f->map) : json(nullptr);
    }

    json action_table(GlobalAct const& B) {
      return B.as_partial().table();
    }

    std::string pair_label(Context const& ctx, pair_type p, char const* sep) {
      return name_of(ctx.doc.act_names, p.first) + sep + name_of(ctx.doc.semigroup_names, p.second);
    }

    json report_validate(Context const& ctx) {
      json r;
      r["valid"]          = true;
      r["semigroup_size"] = ctx.doc.semigroup->size();
      r["act_size"]       = ctx.doc.act.size();
      r["empty_act"]      = ctx.doc.act.size() == 0;
      return r;
    }

    json report_props(Context const& ctx) {
      auto const& S = *ctx.doc.semigroup;
      auto const& A = ctx.doc.act;
      auto const& c = A.conditions();
      json        sg;
      sg["size"]         = S.size();
      sg["identity"]     = S.identity() ? json(*S.identity()) : json(nullptr);
      sg["monoid"]       = S.is_monoid();
      sg["group"]        = S.is_group();
      sg["factorizable"] = S.is_factorizable();

      TensorAct const T(A);
      json            act;
      act["size"]              = A.size();
      act["empty"]             = c.empty;
      act["global"]            = c.global;
      act["pa"]                = c.pa;
      act["strong"]            = c.strong;
      act["unitary"]           = c.unitary;
      act["um"]                = nullable(c.um);
      act["partially_defined"] = c.partially_defined;
      act["inverse_condition"] = nullable(c.inverse_condition);
      act["condition_f"]       = T.satisfies_f();
      act["firm"]              = is_firm(A);
      act["nonsingular"]       = is_nonsingular(A);

      json r;
      r["semigroup"] = std::move(sg);
      r["act"]       = std::move(act);
      return r;
    }

    json report_tensor(Context const& ctx) {
      auto const&     A = ctx.doc.act;
      TensorAct const T(A);
      json            classes = json::array();
      for (index_type k = 0; k < T.size(); ++k) {
        json members = json::array();
        for (auto [a, s] : T.members(k)) {
          members.push_back({a, s});
        }
        json entry;
        entry["index"]          = k;
        entry["representative"] = {T.representative(k).first, T.representative(k).second};
        entry["label"]          = pair_label(ctx, T.representative(k), "⊗");
        entry["members"]        = std::move(members);
        classes.push_back(std::move(entry));
      }
      json r;
      r["size"]           = T.size();
      r["empty_act"]      = A.size() == 0;
      r["classes"]        = std::move(classes);
      r["action"]         = action_table(T.action());
      r["delta"]          = map_json(T.delta());
      r["delta_verified"] = T.delta_verified();
      r["firm_global"]    = is_firm_global(T.action());
      if (A.is_strong() && T.delta_verified()) {
        auto const triple  = is_globalization(A, T.action(), *T.delta());
        r["certificates"]  = certificates_json(triple.certificates);
        r["globalization"] = globalization_json(triple, ctx.doc.semigroup_names);
      } else {
        r["certificates"]  = nullptr;
        r["globalization"] = nullptr;
      }
      return r;
    }

    json report_hom(Context const& ctx) {
      auto const&  A = ctx.doc.act;
      HomAct const H(A);
      json         elements = json::array();
      for (index_type i = 0; i < H.size(); ++i) {
        json function = json::array();
        for (auto [t, v] : H.element(i).pairs()) {
          function.push_back({t, v});
        }
        json entry;
        entry["index"]          = i;
        entry["representative"] = {H.representative(i).first, H.representative(i).second};
        entry["label"]          = "f_" + pair_label(ctx, H.representative(i), ",");
        entry["function"]       = std::move(function);
        entry["zero"]           = H.element(i).is_zero();
        elements.push_back(std::move(entry));
      }
      json r;
      r["size"]        = H.size();
      r["empty_act"]   = A.size() == 0;
      r["elements"]    = std::move(elements);
      r["action"]      = action_table(H.action());
      r["lambda"]      = map_json(H.lambda());
      r["zero_index"]  = H.zero_index() ? json(*H.zero_index()) : json(nullptr);
      r["nonsingular"] = H.is_nonsingular();
      if (H.certified()) {
        auto const triple  = H.triple();
        r["certificates"]  = certificates_json(triple.certificates);
        r["globalization"] = globalization_json(triple, ctx.doc.semigroup_names);
      } else {
        r["certificates"]  = nullptr;
        r["globalization"] = nullptr;
      }
      return r;
    }

    json report_compare(Context const& ctx) {
      auto const& A = ctx.doc.act;
      if (!A.is_strong()) {
        throw not_strong();
      }
      TensorAct const T(A);
      HomAct const    H(A);
      auto const      direct = tensor_to_hom(T, H);
      for (index_type a = 0; a < A.size(); ++a) {
        for (index_type s = 0; s < A.semigroup().size(); ++s) {
          if (direct(T.class_of(a, s)) != H.index_of(a, s)) {
            throw well_definedness_failure("a (x) s -> f_{a,s} is not well defined");
          }
        }
      }
      bool const injective  = is_injective(direct, H.size());
      bool const surjective = is_surjective(direct, H.size());

      auto const at = compare_with_adjoined_tensor(A);
      auto const ah = compare_with_adjoined_hom(A);
      json       adjoined_tensor;
      adjoined_tensor["tensor_size"]   = at.tensor_size;
      adjoined_tensor["adjoined_size"] = at.adjoined_size;
      adjoined_tensor["map"]           = at.map.map;
      adjoined_tensor["injective"]     = at.injective;
      adjoined_tensor["surjective"]    = at.surjective;
      json adjoined_hom;
      adjoined_hom["hom_size"]      = ah.hom_size;
      adjoined_hom["adjoined_size"] = ah.adjoined_size;
      adjoined_hom["c_size"]        = ah.c_size;
      adjoined_hom["injective"]     = ah.injective;
      adjoined_hom["total_on_c"]    = ah.total_on_c;

      json r;
      r["tensor_size"]          = T.size();
      r["hom_size"]             = H.size();
      r["canonical_map"]        = direct.map;
      r["canonical_injective"]  = injective;
      r["canonical_surjective"] = surjective;
      r["isomorphic"]           = injective && surjective;
      r["firm"]                 = A.is_unitary() && T.satisfies_f();
      r["nonsingular"]          = H.is_nonsingular();
      r["adjoined_tensor"]      = std::move(adjoined_tensor);
      r["adjoined_hom"]         = std::move(adjoined_hom);
      return r;
    }

    json report_census(Context const& ctx) {
      auto const result  = census(ctx.doc.act, ctx.bound);
      json       objects = json::array();
      for (index_type i = 0; i < result.objects.size(); ++i) {
        auto const& o = result.objects[i];
        json        entry;
        entry["index"]      = i;
        entry["size"]       = o.triple.B.size();
        entry["initial"]    = i == result.initial_index;
        entry["terminal"]   = i == result.terminal_index;
        entry["action"]     = action_table(o.triple.B);
        entry["iota"]       = o.triple.iota.map;
        entry["congruence"] = o.congruence;
        objects.push_back(std::move(entry));
      }
      json matrix = json::array();
      for (auto const& row : result.morphisms) {
        json r = json::array();
        for (auto const& f : row) {
          r.push_back(map_json(f));
        }
        matrix.push_back(std::move(r));
      }
      json r;
      r["tensor_size"]    = result.tensor.size();
      r["hom_size"]       = result.hom.size();
      r["object_count"]   = result.objects.size();
      r["initial_index"]  = result.initial_index;
      r["terminal_index"] = result.terminal_index;
      r["objects"]        = std::move(objects);
      r["morphisms"]      = std::move(matrix);
      return r;
    }

    json report_onepoint(Context const& ctx) {
      auto const& A      = ctx.doc.act;
      auto const  triple = one_point_globalization(A);
      json        r;
      r["size"]          = triple.B.size();
      r["c"]             = A.size();
      r["certificates"]  = certificates_json(triple.certificates);
      r["globalization"] = globalization_json(triple, ctx.doc.semigroup_names);
      if (A.is_unitary() && !A.is_global() && is_nonsingular(A)) {
        auto const iso = check_isom1(A);
        json       isom1;
        isom1["holds"] = iso.holds;
        isom1["iso"]   = iso.iso.map;
        r["isom1"]     = std::move(isom1);
      } else {
        r["isom1"] = nullptr;
      }
      return r;
    }

    json report_verify(Context const& ctx) {
      if (!ctx.globalization) {
        throw schema_error("", "verify needs a globalization document");
      }
      auto const& A      = ctx.doc.act;
      auto const  doc    = parse_globalization(*ctx.globalization, ctx.doc.semigroup);
      auto const  triple = is_globalization(A, doc.B, doc.iota);
      auto const& c      = triple.certificates;

      json r;
      r["globalization_sha256"] = content_hash(*ctx.globalization);
      r["size"]                 = triple.B.size();
      r["certificates"]         = certificates_json(c);

      std::optional<Morphism> from_tensor, to_hom;
      std::optional<TensorAct> T;
      std::optional<HomAct>    H;
      if (A.is_strong() && c.is_globalization()) {
        T.emplace(A);
        H.emplace(A);
        if (T->delta_verified()) {
          from_tensor = canonical_from_tensor(*T, triple);
        }
        if (A.is_unitary() && H->is_nonsingular() && c.a_generated) {
          to_hom = canonical_to_hom(*H, triple);
        }
      }
      r["from_tensor"] = map_json(from_tensor);
      r["to_hom"]      = map_json(to_hom);
      r["triangle"]    = from_tensor && to_hom ? json(check_triangle(*T, *H, triple)) : json(nullptr);
      if (c.is_globalization() && A.is_unitary()) {
        r["a_generated_subact_size"] = a_generated_subact(triple).B.size();
      } else {
        r["a_generated_subact_size"] = nullptr;
      }
      return r;
    }

    json report_adjoin(Context const& ctx) {
      auto const A1    = adjoin_identity_act(ctx.doc.act);
      auto       names = ctx.doc.semigroup_names;
      if (!names.empty()) {
        std::string one = "1";
        while (std::find(names.begin(), names.end(), one) != names.end()) {
          one += "'";
        }
        names.push_back(one);
      }
      return document_json(A1, names, ctx.doc.act_names);
    }

    using Handler = std::function<json(Context const&)>;

    std::map<std::string, Handler> const& handlers() {
      static std::map<std::string, Handler> const table{{"validate", report_validate},
                                                        {"props", report_props},
                                                        {"tensor", report_tensor},
                                                        {"hom", report_hom},
                                                        {"census", report_census},
                                                        {"compare", report_compare},
                                                        {"onepoint", report_onepoint},
                                                        {"verify", report_verify},
                                                        {"adjoin", report_adjoin}};
      return table;
    }

    json header(std::string const& command) {
      json r;
      r["tool"]    = "globact";
      r["version"] = VERSION;
      r["command"] = command;
      return r;
    }

    RunResult failure(json report, ExitCode code, char const* kind, std::string const& message) {
      report["error"] = {{"kind", kind}, {"message", message}};
      return RunResult{code, std::move(report), message};
    }
  }  // namespace

  std::vector<std::string> const& commands() {
    static std::vector<std::string> const names = [] {
      std::vector<std::string> result;
      for (auto const& [name, handler] : handlers()) {
        result.push_back(name);
      }
      return result;
    }();
    return names;
  }

  RunResult run(std::string const&                command,
                std::string const&                input,
                std::optional<std::string> const& globalization,
                std::size_t                       bound) {
    json report = header(command);
    auto it     = handlers().find(command);
    if (it == handlers().end()) {
      return failure(std::move(report), ExitCode::invalid_input, "UnknownCommand",
                     "unknown command \"" + command + "\"");
    }
    report["input_sha256"] = content_hash(input);
    try {
      Context ctx{parse_document(input), report["input_sha256"].get<std::string>(),
                  globalization, bound};
      json body = it->second(ctx);
      if (command == "adjoin") {
        for (auto& [key, value] : body.items()) {
          report[key] = value;
        }
      } else {
        report["result"] = std::move(body);
      }
      return RunResult{ExitCode::success, std::move(report), {}};
    } catch (search_space_too_large const& e) {
      return failure(std::move(report), ExitCode::resource_exceeded, "SearchSpaceTooLarge",
                     e.what());
    } catch (precondition_failed const& e) {
      return failure(std::move(report), ExitCode::precondition, "PreconditionFailed", e.what());
    } catch (input_error const& e) {
      return failure(std::move(report), ExitCode::invalid_input, "InvalidInput", e.what());
    }
  }

}  // namespace globact
