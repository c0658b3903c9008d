#include <fstream>
#include <sstream>

#include "doctest.h"

#include "fixtures.hpp"
#include "globact/error.hpp"
#include "globact/hom.hpp"
#include "globact/io.hpp"
#include "globact/tensor.hpp"

using namespace globact;

namespace {
  std::string slurp(std::string const& name) {
    std::ifstream     in(std::string(GLOBACT_DATA_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
}  // namespace

TEST_CASE("parse the shipped documents") {
  auto doc = parse_document(slurp("sl2.json"));
  CHECK(doc.semigroup->is_monoid());
  CHECK(doc.act == fixtures::sl2_act());
  CHECK(doc.semigroup_names == std::vector<std::string>{"1", "e"});
  CHECK(doc.act_names == std::vector<std::string>{"a", "b"});
  CHECK(parse_document(slurp("nsub.json")).act == fixtures::nsub());
  CHECK(parse_document(slurp("z2.json")).act == fixtures::z2_act());
  CHECK(parse_document(slurp("triv.json")).act == fixtures::triv());
  CHECK(parse_document(slurp("l2_empty.json")).act == fixtures::l2_empty());
}

TEST_CASE("parse errors") {
  SUBCASE("syntax error is located") {
    try {
      parse_document("{\"semigroup\": {\"size\": 1,\n \"table\": [[0]]}, \"act\": ");
      FAIL("expected parse_error");
    } catch (parse_error const& e) {
      CHECK(e.line == 2);
    }
  }
  SUBCASE("schema") {
    CHECK_THROWS_AS(parse_document("{}"), schema_error);
    CHECK_THROWS_AS(parse_document(R"({"semigroup": {"size": 1, "table": [[0]]},
                                       "act": {"size": 1, "table": [["x"]]}})"),
                    schema_error);
    CHECK_THROWS_AS(parse_document(R"({"semigroup": {"size": 2, "table": [[0]]},
                                       "act": {"size": 1, "table": [[0]]}})"),
                    input_error);
  }
  SUBCASE("out of range") {
    CHECK_THROWS_AS(parse_document(R"({"semigroup": {"size": 1, "table": [[0]]},
                                       "act": {"size": 1, "table": [[3]]}})"),
                    index_out_of_range);
  }
  SUBCASE("(PA) violation") {
    try {
      parse_document(slurp("sl2_pa_violation.json"));
      FAIL("expected pa_violation");
    } catch (pa_violation const& e) {
      CHECK(e.a == 0);
      CHECK(e.s == 1);
      CHECK(e.t == 1);
    }
  }
  SUBCASE("not associative") {
    CHECK_THROWS_AS(parse_document(R"({"semigroup": {"size": 2, "table": [[1, 1], [0, 0]]},
                                       "act": {"size": 0, "table": []}})"),
                    not_associative);
  }
}

TEST_CASE("emitted acts parse back") {
  for (auto const& A : {fixtures::triv(), fixtures::sl2_act(), fixtures::nsub(),
                        fixtures::z2_act(), fixtures::l2_empty()}) {
    auto back = parse_document(document_json(A).dump(2));
    CHECK(back.act == A);
    TensorAct T(A);
    CHECK(parse_document(document_json(T.action().as_partial()).dump()).act
          == T.action().as_partial());
    HomAct H(A);
    CHECK(parse_document(document_json(H.action().as_partial()).dump()).act
          == H.action().as_partial());
  }
}

TEST_CASE("globalization documents") {
  auto S   = fixtures::nsub_monoid();
  auto doc = parse_globalization(slurp("nsub_onepoint.json"), S);
  CHECK(doc.B.size() == 3);
  CHECK(doc.iota == identity_morphism(2));
  auto round = parse_globalization(globalization_json(one_point_globalization(fixtures::nsub())).dump(),
                                   S);
  CHECK(round.B == doc.B);
  CHECK_THROWS_AS(parse_globalization(slurp("nsub_onepoint.json"), fixtures::sl2()),
                  input_error);
  CHECK_THROWS_AS(parse_globalization(R"({"act": {"size": 1, "table": [[0, null, 0, 0]]},
                                          "iota": [0]})",
                                      S),
                  schema_error);
}

TEST_CASE("content hash") {
  CHECK(content_hash("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(content_hash("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
