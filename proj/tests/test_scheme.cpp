#include <doctest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "schemelab/error.hpp"
#include "schemelab/export.hpp"
#include "schemelab/oracle.hpp"
#include "schemelab/scheme.hpp"

using namespace schemelab;
using fixtures::k2;
using fixtures::k3;
using fixtures::sets;

TEST_CASE("canonical levels of the sample schemes") {
  CHECK(k2().level(2) == sets({{0, 1, 2}}));
  CHECK(k2().level(1) == sets({{0, 1}, {0, 2}}));
  CHECK(k2().level(0) == sets({{0}, {1}, {2}}));

  const Scheme k1 = Scheme::build(make_type_prefix({{1, 2, 0}}));
  CHECK(k1.level(1) == sets({{0, 1}}));
  CHECK(k1.level(0) == sets({{0}, {1}}));

  CHECK(k3().level(3) == sets({{0, 1, 2, 3, 4, 5}}));
  CHECK(k3().level(2) == sets({{0, 1, 2}, {3, 4, 5}}));
  CHECK(k3().level(1) == sets({{0, 1}, {0, 2}, {3, 4}, {3, 5}}));

  // Same levels straight from the definition.
  for (const Scheme* s : {&k2(), &k3()}) {
    const auto naive = oracle::levels_naive(s->type());
    for (Level k = 0; k <= s->K(); ++k) {
      std::set<oracle::Member> fast;
      for (const FinSet& F : s->level(k)) fast.emplace(F.begin(), F.end());
      CHECK(fast == naive[k]);
    }
  }
}

TEST_CASE("canonical decomposition") {
  const Decomposition d2 = canonical_decomposition(k2(), FinSet{0, 1, 2});
  CHECK(d2.root == FinSet{0});
  CHECK(d2.children == sets({{0, 1}, {0, 2}}));

  const Decomposition d1 = canonical_decomposition(k3(), FinSet{0, 1});
  CHECK(d1.root.empty());
  CHECK(d1.children == sets({{0}, {1}}));

  const Decomposition d3 = canonical_decomposition(k3(), FinSet{3, 4, 5});
  CHECK(d3.root == FinSet{3});
  CHECK(d3.children == sets({{3, 4}, {3, 5}}));

  CHECK_THROWS_AS(canonical_decomposition(k3(), FinSet{1, 2}), Error);
}

TEST_CASE("decomposition invariants on small schemes") {
  for (const Scheme& s : fixtures::small_schemes()) {
    for (Level k = 1; k <= s.K(); ++k) {
      for (const FinSet& F : s.level(k)) {
        const Decomposition d = canonical_decomposition(s, F);
        REQUIRE(d.children.size() == s.type().n(k));
        CHECK(d.root.size() == s.type().r(k));
        FinSet all;
        for (std::size_t i = 0; i < d.children.size(); ++i) {
          const FinSet tail = d.children[i].minus(d.root);
          CHECK(precedes(d.root, tail));
          if (i + 1 < d.children.size()) CHECK(precedes(tail, d.children[i + 1].minus(d.root)));
          CHECK(s.member_index(k - 1, d.children[i]) >= 0);
          all = all.unite(d.children[i]);
        }
        CHECK(all == F);
      }
    }
  }
}

TEST_CASE("axioms hold and a corrupted level is caught") {
  CHECK(verify_axioms(k2()).empty());
  CHECK(verify_axioms(k3()).empty());
  for (const Scheme& s : fixtures::small_schemes()) CHECK(verify_axioms(s).empty());

  const Scheme bad = Scheme::from_levels(k2().type(), {sets({{0}, {1}, {2}}), sets({{0, 1}, {1, 2}}), sets({{0, 1, 2}})});
  const auto report = verify_axioms(bad);
  REQUIRE_FALSE(report.empty());
  bool axiom_i = false;
  for (const auto& v : report) axiom_i = axiom_i || (v.axiom == "i" && v.level == 1);
  CHECK(axiom_i);
}

TEST_CASE("rho and rho_set") {
  CHECK(k2().rho(0, 1) == 1);
  CHECK(k2().rho(1, 2) == 2);
  CHECK(k3().rho(2, 5) == 3);
  for (Ordinal a = 0; a < 6; ++a) CHECK(k3().rho(a, a) == 0);
  CHECK(oracle::rho_naive(k2(), 1, 2) == 2);
  CHECK(oracle::rho_naive(k3(), 2, 5) == 3);

  CHECK(k2().rho_set(FinSet{0, 1, 2}) == 2);
  CHECK(k2().rho_set(FinSet{1}) == 0);
  CHECK(k2().rho_set(FinSet{0, 1}) == 1);
  CHECK_THROWS_AS(k2().rho(0, 3), Error);
  CHECK_THROWS_AS(k2().rho_set(FinSet{0, 7}), Error);
}

TEST_CASE("closures and norms") {
  CHECK(k2().closure(2, 1) == FinSet{0, 2});
  CHECK(k3().closure(5, 2) == FinSet{3, 4, 5});
  CHECK(oracle::closure_naive(k3(), 5, 2) == FinSet{3, 4, 5});
  for (Ordinal a = 0; a < 6; ++a) CHECK(k3().closure(a, 0) == FinSet{a});

  CHECK(k2().norm(2, 1) == 1);
  CHECK(k2().norm(2, 2) == 2);
  CHECK(k3().norm(5, 3) == 5);
  CHECK(oracle::norm_naive(k3(), 5, 3) == 5);
  for (Ordinal a = 0; a < 6; ++a) CHECK(k3().norm(a, 0) == 0);
  CHECK_THROWS_AS(k3().closure(6, 1), Error);
  CHECK_THROWS_AS(k3().norm(0, 4), Error);
}

TEST_CASE("delta and xi") {
  CHECK(k2().delta(1, 2) == 2);
  CHECK(oracle::delta_naive(k2(), 1, 2) == 2);
  CHECK(k3().delta(2, 5) == 3);
  CHECK(oracle::delta_naive(k3(), 2, 5) == 3);
  for (Ordinal a = 0; a < 6; ++a) CHECK(k3().delta(a, a) == kTop);

  CHECK(k2().xi(2, 2) == 1);
  CHECK(k2().xi(1, 2) == 0);
  CHECK(k2().xi(2, 1) == 1);
  CHECK(k2().xi(0, 2) == -1);
  CHECK(k3().xi(5, 3) == 1);
  CHECK(oracle::xi_naive(k3(), 5, 3) == 1);
  for (Ordinal a = 0; a < 3; ++a) CHECK(k2().xi(a, 0) == 0);
}

TEST_CASE("closure is the trace of every containing member") {
  for (const Scheme& s : fixtures::small_schemes()) {
    for (Level k = 0; k <= s.K(); ++k) {
      for (const FinSet& F : s.level(k)) {
        for (std::size_t pos = 0; pos < F.size(); ++pos) {
          CHECK(s.closure(F(pos), k) == F.below(F(pos) + 1));
          CHECK(s.norm(F(pos), k) == pos);
        }
      }
    }
  }
}

TEST_CASE("ordinal metric and delta properties on small schemes") {
  for (const Scheme& s : fixtures::small_schemes()) {
    const Ordinal N = s.domain_size();
    for (Ordinal a = 0; a < N; ++a) {
      for (Ordinal b = 0; b < N; ++b) {
        CHECK((s.rho(a, b) == 0) == (a == b));
        CHECK(s.rho(a, b) == s.rho(b, a));
        if (a != b) CHECK(s.delta(a, b) <= s.rho(a, b));
        if (a < b) {
          for (Level k = s.rho(a, b); k <= s.K(); ++k) CHECK(s.norm(a, k) < s.norm(b, k));
        }
        for (Ordinal c = 0; c < N; ++c) {
          if (a <= std::min(b, c)) CHECK(s.rho(a, b) <= std::max(s.rho(a, c), s.rho(b, c)));
          if (s.delta(a, b) < s.delta(b, c)) CHECK(s.delta(a, b) == s.delta(a, c));
        }
      }
    }
  }
}

TEST_CASE("scheme JSON and CSV exports") {
  const auto j = nlohmann::json::parse(scheme_to_json(k2()));
  CHECK(j["type"] == nlohmann::json::parse("[[1,2,0],[2,2,1]]"));
  CHECK(j["levels"][1] == nlohmann::json::parse("[[0,1],[0,2]]"));
  CHECK(xi_csv(k2()).rfind("alpha,k,value\n", 0) == 0);
  CHECK(xi_csv(k2()).find("\n2,2,1\n") != std::string::npos);
  CHECK(norm_csv(k2()).find("\n2,1,1\n") != std::string::npos);
  CHECK(rho_csv(k2()).rfind("alpha,beta,value\n", 0) == 0);
  CHECK(rho_csv(k2()).find("\n1,2,2\n") != std::string::npos);
}
