#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "schemelab/cli.hpp"

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = schemelab::cli::run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

const std::string kK2 = "1,2,0;2,2,1";
const std::string kK3 = "1,2,0;2,2,1;3,2,0";

}  // namespace

TEST_CASE("build") {
  const Outcome o = run({"build", "--type", kK3});
  CHECK(o.code == 0);
  CHECK(o.out == "type: 1,2,0;2,2,1;3,2,0\nK: 3\ndomain: 6\nlevels: 1/2/4/6 members\n");

  const Outcome j = run({"build", "--type", "[[1,2,0],[2,2,1]]", "--format", "json"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["K"] == 2);
  CHECK(doc["domain"] == 3);

  const Outcome bad = run({"build", "--type", "1,2,0;3,2,1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error:") == 0);
  CHECK(run({"build"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);

  const auto path = std::filesystem::temp_directory_path() / "schemelab_cli_dump.json";
  REQUIRE(run({"build", "--type", kK2, "--dump", path.string()}).code == 0);
  std::ifstream in(path);
  const auto dumped = nlohmann::json::parse(in);
  CHECK(dumped["levels"][1] == nlohmann::json::parse("[[0,1],[0,2]]"));
  std::filesystem::remove(path);
}

TEST_CASE("query") {
  CHECK(run({"query", "--type", kK2, "bracket", "1", "2"}).out == "2\n");
  CHECK(run({"query", "--type", kK2, "rho", "0", "0"}).out == "0\n");
  CHECK(run({"query", "--type", kK2, "delta", "1", "1"}).out == "top\n");
  CHECK(run({"query", "--type", kK3, "closure", "5", "2"}).out == "3 4 5\n");
  CHECK(run({"query", "--type", kK3, "xi", "5", "3"}).out == "1\n");
  CHECK(run({"query", "--type", kK2, "rho", "1", "2", "--format", "csv"}).out == "fn,a,b,value\nrho,1,2,2\n");
  const auto j = nlohmann::json::parse(run({"query", "--type", kK2, "delta", "0", "0", "--format", "json"}).out);
  CHECK(j["value"] == "top");
  CHECK(run({"query", "--type", kK2, "rho"}).out.rfind("alpha,beta,value\n", 0) == 0);
  CHECK(run({"query", "--type", kK2, "rho", "0", "9"}).code == 2);
  CHECK(run({"query", "--type", kK2, "nope", "0", "1"}).code == 2);
  CHECK(run({"query", "--type", kK2, "closure"}).code == 2);
}

TEST_CASE("capture") {
  const Outcome all = run({"capture", "--type", kK3, "--levels", "3"});
  REQUIRE(all.code == 0);
  CHECK(all.out == "level,tuple,bracket\n3,0 3,3\n3,1 4,3\n3,2 5,3\n");

  const std::vector<std::string> big{"capture", "--type", "1,2,0;2,3,1;4,2,1;7,2,2", "--n", "3", "--cap", "40"};
  auto with_seed = [&](const std::string& seed, const std::string& threads) {
    auto args = big;
    args.insert(args.end(), {"--seed", seed, "--threads", threads});
    return run(args);
  };
  const Outcome s1 = with_seed("1", "1");
  REQUIRE(s1.code == 0);
  CHECK(s1.out.rfind("SAMPLED(seed=1) examined=", 0) == 0);
  CHECK(with_seed("1", "3").out == s1.out);
  CHECK(with_seed("2", "1").out != s1.out);

  CHECK(run({"capture", "--type", kK3, "--set", "0 9"}).code == 2);
  CHECK(run({"capture", "--type", kK3, "--n", "1"}).code == 2);
}

TEST_CASE("gap") {
  const Outcome h = run({"gap", "--type", kK2});
  CHECK(h.out == "alpha,L,R\n0,2,3\n1,3 4,2 5\n2,3 5,2 4\n");
  CHECK(run({"gap", "--type", kK3, "--check"}).out == "[]\n");

  const Outcome empty = run({"gap", "--type", kK2, "--variant", "todorcevic", "--format", "json"});
  REQUIRE(empty.code == 0);
  for (const auto& row : nlohmann::json::parse(empty.out)) {
    CHECK(row["L"].empty());
    CHECK(row["R"].empty());
  }
  CHECK(run({"gap", "--type", kK3, "--variant", "todorcevic", "--p0", "2 3", "--check"}).code == 0);
  CHECK(run({"gap", "--type", kK3, "--variant", "todorcevic", "--p0", "4"}).code == 2);
  CHECK(run({"gap", "--type", kK2, "--diff", "all"}).out == "alpha,L,R\n0,3 4,2 5\n1,5,4\n");
  CHECK(run({"gap", "--type", "1,3,0"}).code == 2);
}

TEST_CASE("poset") {
  const auto check = nlohmann::json::parse(run({"poset", "--type", kK3, "--kind", "DN", "--levels", "3", "check", "2 5"}).out);
  CHECK(check["valid"] == false);
  const auto ok = nlohmann::json::parse(run({"poset", "--type", kK3, "--kind", "DN", "--levels", "3", "check", "1 2"}).out);
  CHECK(ok["valid"] == true);

  const Outcome f = run({"poset", "--type", kK3, "filter"});
  REQUIRE(f.code == 0);
  const auto filt = nlohmann::json::parse(f.out);
  CHECK(filt["complete"] == true);
  CHECK(filt.contains("separating"));

  const auto comp = nlohmann::json::parse(run({"poset", "--type", kK3, "compatible", "0:1", "0:2"}).out);
  CHECK(comp["compatible"] == false);

  const auto anti = nlohmann::json::parse(run({"poset", "--type", kK2, "--kind", "CHI0", "--budget", "0", "antichain"}).out);
  CHECK(anti["status"] == "BudgetExceeded");

  CHECK(run({"poset", "--type", kK3, "check", "0:x"}).code == 2);
  CHECK(run({"poset", "--type", kK3, "--format", "csv", "check"}).code == 2);
  CHECK(run({"poset", "--type", kK3, "dance"}).code == 2);
}

TEST_CASE("verify") {
  const Outcome a = run({"verify", "--suite", "types", "--suite", "examples"});
  CHECK(a.code == 0);
  CHECK(a.out.rfind("verify seed=1\nPASS types", 0) == 0);
  CHECK(a.out.find("2/2 suites passed\n") != std::string::npos);
  CHECK(run({"verify", "--suite", "types", "--suite", "examples"}).out == a.out);

  const Outcome bad = run({"verify", "--suite", "examples", "--corrupt"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL examples") != std::string::npos);

  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
  CHECK(run({"verify", "--suite", "types", "--format", "csv"}).code == 2);

  const auto j = nlohmann::json::parse(run({"verify", "--suite", "types", "--format", "json", "--seed", "5"}).out);
  CHECK(j["seed"] == 5);
  CHECK(j["passed"] == true);
}
