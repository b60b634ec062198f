#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "dlexplain/cli.hpp"
#include "support.hpp"

using namespace dlx;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fx(const std::string& rel) { return test::fixture_path(rel); }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("dlexplain_cli_" + name)).string();
}

}  // namespace

TEST_CASE("learn on the warehouse reports ten solutions") {
  const auto report = temp_path("wh.json");
  const auto r = run({"learn", "--kb", fx("warehouse/warehouse.dlkb"), "--problem", fx("warehouse/warehouse.prob"),
                      "--out", report});
  REQUIRE(r.code == cli::kExitOk);
  const auto stdout_json = json::parse(r.out);
  CHECK(stdout_json["subcommand"] == "learn");
  CHECK(stdout_json.contains("elapsed_ms"));
  const auto file_json = json::parse(test::read_file(report));
  CHECK(file_json == stdout_json["result"]);
  REQUIRE(file_json["solutions"].size() == 10);
  for (const auto& s : file_json["solutions"]) {
    CHECK(s["accuracy"] == 1.0);
    CHECK(s["tp"] == 3);
    CHECK(s["fp"] == 0);
  }
  for (const auto* key : {"config", "exhausted", "expansions_used", "solutions"}) CHECK(file_json.contains(key));
  std::remove(report.c_str());
}

TEST_CASE("learn reports are byte-identical across runs") {
  const auto a = temp_path("a.json");
  const auto b = temp_path("b.json");
  const std::vector<std::string> base = {"learn",           "--kb",        fx("trains/trains.dlkb"),
                                         "--problem",       fx("trains/trains.prob"),
                                         "--max-expansions", "800"};
  auto args_a = base;
  args_a.insert(args_a.end(), {"--out", a});
  auto args_b = base;
  args_b.insert(args_b.end(), {"--out", b});
  const auto ra = run(args_a);
  const auto rb = run(args_b);
  REQUIRE(ra.code == 0);
  REQUIRE(rb.code == 0);
  CHECK(test::read_file(a) == test::read_file(b));
  auto ja = json::parse(ra.out);
  auto jb = json::parse(rb.out);
  ja.erase("elapsed_ms");
  jb.erase("elapsed_ms");
  ja["config"].erase("out");
  jb["config"].erase("out");
  CHECK(ja.dump() == jb.dump());
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("learn keys are sorted") {
  const auto r = run({"learn", "--kb", fx("prop/prop.dlkb"), "--problem", fx("prop/prop.prob")});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  const auto& sol = j["result"]["solutions"][0];
  CHECK(sol["expression"] == "p and q");
  std::string previous;
  for (const auto& [key, value] : sol.items()) {
    CHECK(previous < key);
    previous = key;
  }
}

TEST_CASE("translate prints the nested quantifier formula") {
  const auto r = run({"translate", "--axiom", "A => R some (S some B)"});
  CHECK(r.code == 0);
  CHECK(r.out == "forall x0.(A(x0) -> exists x1.(R(x0,x1) & exists x2.(S(x1,x2) & B(x2))))\n");
  const auto s = run({"translate"}, "# comment\ngci C => D\n");
  CHECK(s.code == 0);
  CHECK(s.out == "forall x0.(C(x0) -> D(x0))\n");
}

TEST_CASE("verify prints coverage") {
  const auto r = run({"verify", "--kb", fx("warehouse/warehouse.dlkb"), "--problem", fx("warehouse/warehouse.prob"),
                      "--expr", "contains only not Ceiling"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["tp"] == 3);
  CHECK(j["tn"] == 3);
  CHECK(j["accuracy"] == 1.0);
  CHECK(j["truePositives"] == json::array({"p1", "p2", "p3"}));
  CHECK(j["expression"] == "contains only not Ceiling");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"learn", "--kb", "missing.dlkb", "--problem", fx("prop/prop.prob")}).code == cli::kExitUsage);
  CHECK(run({"learn", "--kb", fx("prop/prop.dlkb"), "--problem", fx("prop/prop.prob"), "--noise", "1"}).code ==
        cli::kExitUsage);
  CHECK(run({"learn", "--kb", fx("prop/prop.dlkb"), "--problem", fx("prop/prop.prob"), "--top-k", "x"}).code ==
        cli::kExitUsage);
  CHECK(run({"translate"}).code == cli::kExitUsage);

  const auto bad_expr = run({"verify", "--kb", fx("warehouse/warehouse.dlkb"), "--problem",
                             fx("warehouse/warehouse.prob"), "--expr", "contains some Unicorn"});
  CHECK(bad_expr.code == cli::kExitData);
  const auto err = json::parse(bad_expr.err);
  CHECK(err["error"] == "parse");
  CHECK(err["line"] == 1);
  CHECK(err["column"] == 15);

  // A problem file that references individuals from another KB.
  CHECK(run({"learn", "--kb", fx("prop/prop.dlkb"), "--problem", fx("trains/trains.prob")}).code == cli::kExitData);
  CHECK(run({"translate", "--axiom", "A =>"}).code == cli::kExitData);
}

TEST_CASE("help documents every flag") {
  const auto learn = run({"learn", "--help"});
  CHECK(learn.code == 0);
  for (const auto* flag : {"--kb", "--problem", "--max-expansions", "--max-length", "--top-k", "--noise",
                           "--length-penalty", "--enable-disjunction", "--out"}) {
    CHECK_MESSAGE(learn.out.find(flag) != std::string::npos, flag);
  }
  const auto ingest = run({"ingest", "--help"});
  for (const auto* flag :
       {"--annotations", "--mapping", "--role", "--background", "--positives", "--out-kb", "--out-problem"}) {
    CHECK_MESSAGE(ingest.out.find(flag) != std::string::npos, flag);
  }
  CHECK(run({"translate", "--help"}).out.find("--axiom") != std::string::npos);
  CHECK(run({"verify", "--help"}).out.find("--expr") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("ingest rebuilds the shipped warehouse fixture") {
  const auto kb = temp_path("wh.dlkb");
  const auto prob = temp_path("wh.prob");
  const auto r = run({"ingest", "--annotations", fx("warehouse/annotations.tsv"), "--mapping",
                      fx("warehouse/mapping.tsv"), "--background", fx("warehouse/sumo_fragment.dlkb"), "--positives",
                      "p1,p2,p3", "--out-kb", kb, "--out-problem", prob});
  REQUIRE(r.code == 0);
  CHECK(test::read_file(kb) == test::read_file(fx("warehouse/warehouse.dlkb")));
  CHECK(test::read_file(prob) == test::read_file(fx("warehouse/warehouse.prob")));
  const auto j = json::parse(r.out);
  CHECK(j["result"]["records"] == 6);

  const auto bad = run({"ingest", "--annotations", fx("warehouse/annotations.tsv"), "--mapping",
                        fx("warehouse/mapping.tsv"), "--background", fx("warehouse/sumo_fragment.dlkb"),
                        "--positives", "p1,p2,p3,n1,n2,n3", "--out-kb", kb, "--out-problem", prob});
  CHECK(bad.code == cli::kExitData);
  std::remove(kb.c_str());
  std::remove(prob.c_str());
}
