#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#include "globact/cli.hpp"
#include "globact/io.hpp"

using namespace globact;

namespace {
  std::string path(std::string const& name) {
    return std::string(GLOBACT_DATA_DIR) + "/" + name;
  }

  std::string slurp(std::string const& file) {
    std::ifstream     in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  RunResult run_on(std::string const& command, std::string const& name) {
    return run(command, slurp(path(name)));
  }

  int exit_status(std::string const& args) {
    std::string const cmd = std::string(GLOBACT_BINARY) + " --quiet " + args;
    int const         rc  = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  }
}  // namespace

TEST_CASE("report header") {
  auto r = run_on("validate", "sl2.json");
  CHECK(r.code == ExitCode::success);
  CHECK(r.report["tool"] == "globact");
  CHECK(r.report["version"] == VERSION);
  CHECK(r.report["command"] == "validate");
  CHECK(r.report["input_sha256"] == content_hash(slurp(path("sl2.json"))));
  CHECK(r.report["result"]["valid"] == true);
}

TEST_CASE("props") {
  auto r = run_on("props", "sl2.json");
  REQUIRE(r.code == ExitCode::success);
  auto const& p = r.report["result"];
  CHECK(p["semigroup"]["monoid"] == true);
  CHECK(p["act"]["strong"] == true);
  CHECK(p["act"]["unitary"] == true);
  CHECK(p["act"]["firm"] == true);
}

TEST_CASE("compare") {
  auto nsub = run_on("compare", "nsub.json");
  REQUIRE(nsub.code == ExitCode::success);
  CHECK(nsub.report["result"]["tensor_size"] == 4);
  CHECK(nsub.report["result"]["hom_size"] == 3);
  CHECK(nsub.report["result"]["canonical_injective"] == false);
  CHECK(nsub.report["result"]["isomorphic"] == false);
  auto z2 = run_on("compare", "z2.json");
  REQUIRE(z2.code == ExitCode::success);
  CHECK(z2.report["result"]["tensor_size"] == 2);
  CHECK(z2.report["result"]["hom_size"] == 2);
  CHECK(z2.report["result"]["isomorphic"] == true);
}

TEST_CASE("census") {
  auto r = run_on("census", "nsub.json");
  REQUIRE(r.code == ExitCode::success);
  auto const& c = r.report["result"];
  CHECK(c["object_count"] == 2);
  CHECK(c["objects"].size() == 2);
  CHECK(c["objects"][c["initial_index"].get<int>()]["size"] == 4);
  CHECK(c["objects"][c["terminal_index"].get<int>()]["size"] == 3);
  CHECK(run_on("census", "l2_empty.json").code == ExitCode::precondition);
  CHECK(run("census", slurp(path("nsub.json")), std::nullopt, 2).code
        == ExitCode::resource_exceeded);
}

TEST_CASE("tensor, hom and onepoint") {
  auto t = run_on("tensor", "nsub.json");
  REQUIRE(t.code == ExitCode::success);
  CHECK(t.report["result"]["size"] == 4);
  CHECK(t.report["result"]["classes"][0]["label"] == "1⊗1");
  auto h = run_on("hom", "nsub.json");
  REQUIRE(h.code == ExitCode::success);
  CHECK(h.report["result"]["size"] == 3);
  auto o = run_on("onepoint", "sl2.json");
  REQUIRE(o.code == ExitCode::success);
  CHECK(o.report["result"]["size"] == 3);
  CHECK(run_on("onepoint", "z2.json").code == ExitCode::precondition);
}

TEST_CASE("verify") {
  auto r = run("verify", slurp(path("nsub.json")), slurp(path("nsub_onepoint.json")));
  REQUIRE(r.code == ExitCode::success);
  CHECK(r.report["result"]["certificates"]["g1"] == true);
  CHECK(r.report["result"]["certificates"]["a_generated"] == true);
  CHECK(r.report["result"]["triangle"] == true);
  CHECK(run("verify", slurp(path("nsub.json"))).code == ExitCode::invalid_input);
}

TEST_CASE("adjoin output parses back") {
  auto r = run_on("adjoin", "l2_empty.json");
  REQUIRE(r.code == ExitCode::success);
  auto back = parse_document(r.report.dump(2));
  CHECK(back.semigroup->size() == 3);
  CHECK(back.semigroup->is_monoid());
  CHECK(back.act.is_unitary());
  CHECK(back.semigroup_names.back() == "1");
  auto sl2 = run_on("adjoin", "sl2.json");
  CHECK(parse_document(sl2.report.dump()).semigroup_names.back() == "1'");
}

TEST_CASE("errors never throw") {
  CHECK(run("frobnicate", "{}").code == ExitCode::invalid_input);
  CHECK(run("validate", "not json").code == ExitCode::invalid_input);
  auto pa = run_on("validate", "sl2_pa_violation.json");
  CHECK(pa.code == ExitCode::invalid_input);
  CHECK(pa.report["error"]["message"].get<std::string>().find("(0, 1, 1)") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  for (auto const& command : commands()) {
    if (command == "verify") {
      continue;
    }
    auto a = run_on(command, "nsub.json").report.dump(2);
    auto b = run_on(command, "nsub.json").report.dump(2);
    CHECK(a == b);
  }
}

TEST_CASE("binary exit codes") {
  CHECK(exit_status("validate " + path("sl2.json")) == 0);
  CHECK(exit_status("validate " + path("sl2_pa_violation.json")) == 1);
  CHECK(exit_status("census " + path("l2_empty.json")) == 2);
  CHECK(exit_status("--bound 2 census " + path("nsub.json")) == 3);
  CHECK(exit_status("verify " + path("nsub.json") + " " + path("nsub_onepoint.json")) == 0);
  CHECK(exit_status("validate /nonexistent/file.json") == 1);
}

TEST_CASE("binary writes --out and matches the library") {
  std::string const out = "globact_cli_test_out.json";
  std::remove(out.c_str());
  REQUIRE(exit_status("compare " + path("nsub.json") + " --out " + out) == 0);
  CHECK(slurp(out) == run_on("compare", "nsub.json").report.dump(2) + "\n");
  std::remove(out.c_str());
}
