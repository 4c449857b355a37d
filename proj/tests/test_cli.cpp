#include <cstdio>
#include <fstream>
#include <sstream>

#include "crownfree/cli.hpp"
#include "crownfree/crown.hpp"
#include "crownfree/extremal.hpp"
#include "crownfree/graph_io.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"

using namespace crownfree;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "cli_test_" + name;
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

}  // namespace

TEST_CASE("check") {
  const auto crown = write_temp("crown.l3g", to_l3g(fixtures::crown()));
  const Run r = run({"check", crown});
  CHECK(r.code == kExitPropertyFails);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["base"] == nlohmann::json::array({0, 1, 2}));
  CHECK(j["jewels"].size() == 3);

  const auto fano = write_temp("fano.l3g", to_l3g(fixtures::fano()));
  const Run f = run({"check", fano});
  CHECK(f.code == kExitOk);
  CHECK(f.out == "crown-free\n");

  const auto bad = write_temp("bad.l3g", "4 2\n0 1 2\n0 1 3\n");
  const Run b = run({"check", bad});
  CHECK(b.code == kExitUsage);
  CHECK(b.err.find("line 3") != std::string::npos);

  CHECK(run({"check", "does-not-exist.l3g"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"exact", "--n", "7", "--bogus"}).code == kExitUsage);
  CHECK(run({"exact"}).code == kExitUsage);
  CHECK(run({"lemmas", "--suite", "nope"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("exact") {
  const Run r = run({"exact", "--n", "7", "--json"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "crownfree.certificate/1");
  CHECK(j["value"] == 7);
  CHECK(j["exhaustive"] == true);
  CHECK(parse_l3g(j["witnesses"][0].get<std::string>()).num_edges() == 7);

  const Run a = run({"exact", "--n", "10", "--json", "--stable", "--threads", "1"});
  const Run b = run({"exact", "--n", "10", "--json", "--stable", "--threads", "3"});
  CHECK(a.out == b.out);

  const Run budget = run({"exact", "--n", "12", "--max-nodes", "3"});
  CHECK(budget.code == kExitBudget);
}

TEST_CASE("construct and random emit L3G") {
  const Run c = run({"construct", "--n", "11"});
  CHECK(c.code == kExitOk);
  CHECK(parse_l3g(c.out).num_edges() == 12);

  const Run r1 = run({"random", "--n", "12", "--m", "10", "--seed", "4"});
  const Run r2 = run({"random", "--n", "12", "--m", "10", "--seed", "4"});
  CHECK(r1.code == kExitOk);
  CHECK(r1.out == r2.out);
  CHECK(to_l3g(parse_l3g(r1.out)) == r1.out);
  CHECK(run({"random", "--n", "7", "--m", "99", "--seed", "1"}).code == kExitUsage);
}

TEST_CASE("discharge and link") {
  const auto star = write_temp("grid.l3g", to_l3g(fixtures::star_with_grids(10)));
  const Run d = run({"discharge", star, "--json"});
  REQUIRE(d.code == kExitOk);
  const auto j = nlohmann::json::parse(d.out);
  CHECK(j["large"] == nlohmann::json::array({0}));
  CHECK(j["edges"].size() == 50);
  CHECK(j.contains("trace"));
  CHECK(run({"discharge", star}).code == kExitOk);

  const auto crown = write_temp("crown2.l3g", to_l3g(fixtures::crown()));
  const Run l = run({"link", crown, "--edge", "0"});
  CHECK(l.code == kExitOk);
  CHECK(nlohmann::json::parse(l.out)["edges"].size() == 3);
  const Run dot = run({"link", crown, "--edge", "0", "--dot"});
  CHECK(dot.out.find("graph") != std::string::npos);
  CHECK(run({"link", crown, "--edge", "4"}).code == kExitUsage);
}

TEST_CASE("lemmas") {
  const Run r = run({"lemmas", "--suite", "order11"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("order = 11") != std::string::npos);
  const Run a = run({"lemmas", "--suite", "lemma1", "--count", "50", "--json", "--stable"});
  const Run b = run({"lemmas", "--suite", "lemma1", "--count", "50", "--json", "--stable"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
}
