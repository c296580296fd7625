#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "schemelab/cli.hpp"
#include "schemelab/verify.hpp"

using namespace schemelab;

namespace {

struct Line {
  int id;
  const char* what;
  double limit;  // seconds; 0 for none
};

unsigned thread_count() {
  if (const char* env = std::getenv("SCHEMELAB_THREADS")) return static_cast<unsigned>(std::max(1L, std::atol(env)));
  return std::max(1u, std::thread::hardware_concurrency());
}

bool report(const Line& l, bool ok, double secs, const std::string& detail) {
  const bool in_time = l.limit == 0 || secs < l.limit;
  const bool pass = ok && in_time;
  std::printf("%s criterion %d (%s): %.2fs", pass ? "PASS" : "FAIL", l.id, l.what, secs);
  if (l.limit > 0) std::printf(" (limit %.0fs)", l.limit);
  if (!detail.empty()) std::printf(" %s", detail.c_str());
  if (!in_time) std::printf(" over time");
  std::printf("\n");
  std::fflush(stdout);
  return pass;
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str() + err.str();
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  verify::Options opts;
  opts.threads = thread_count();
  bool all = true;

  const Line suites[] = {{1, "type recursion", 1},
                         {2, "scheme axioms", 30},
                         {3, "canonical-function laws", 60},
                         {4, "oracle equivalence; capture coverage reduced as documented", 0},
                         {5, "worked examples", 0},
                         {6, "gap laws", 60},
                         {7, "poset laws", 30}};
  const char* names[] = {"types", "axioms", "laws", "oracle", "examples", "gaps", "posets"};
  for (int i = 0; i < 7; ++i) {
    const auto t0 = clock::now();
    const verify::SuiteResult r = verify::run_suite(names[i], opts);
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    std::string detail = std::to_string(r.checks) + " checks";
    if (!r.passed) {
      detail += ", " + std::to_string(r.failures) + " failed";
      for (const auto& m : r.messages) detail += "\n  " + m;
    }
    all = report(suites[i], r.passed, secs, detail) && all;
  }

  {
    const auto t0 = clock::now();
    int c1 = 0, c2 = 0, s1c = 0, s2c = 0;
    const std::string threads = std::to_string(opts.threads);
    const std::string v1 = run_cli({"verify", "--seed", "7", "--threads", threads}, c1);
    const std::string v2 = run_cli({"verify", "--seed", "7", "--threads", threads}, c2);
    const std::vector<std::string> sample{"capture", "--type", "1,2,0;2,3,1;4,2,1;7,2,2", "--n", "3", "--cap", "40"};
    auto with_seed = [&](const char* seed, int& code) {
      auto args = sample;
      args.insert(args.end(), {"--seed", seed});
      return run_cli(args, code);
    };
    const std::string s1 = with_seed("1", s1c);
    const std::string s2 = with_seed("2", s2c);
    const bool same = c1 == 0 && c2 == 0 && v1 == v2;
    const bool sampled = s1c == 0 && s2c == 0 && s1.rfind("SAMPLED(seed=1)", 0) == 0 && s1 != s2;
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    std::string detail = std::string("verify twice ") + (same ? "identical" : "DIFFERENT") + ", seeds 1/2 " +
                         (sampled ? "differ" : "DO NOT DIFFER");
    all = report({8, "determinism", 0}, same && sampled, secs, detail) && all;
  }

  std::printf("%s\n", all ? "all criteria passed" : "some criteria failed");
  return all ? 0 : 1;
}
