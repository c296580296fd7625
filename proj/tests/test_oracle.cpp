#include <doctest.h>

#include "fixtures.hpp"
#include "schemelab/capture.hpp"
#include "schemelab/error.hpp"
#include "schemelab/gaps.hpp"
#include "schemelab/oracle.hpp"

using namespace schemelab;
using fixtures::k2;
using fixtures::k3;

TEST_CASE("the oracle matches the fast tables on the sample schemes") {
  for (const Scheme* s : {&k2(), &k3()}) {
    const oracle::NaiveTables t = oracle::tabulate(*s);
    const Ordinal N = s->domain_size();
    for (Ordinal a = 0; a < N; ++a) {
      for (Ordinal b = 0; b < N; ++b) {
        CHECK(t.rho_at(a, b) == s->rho(a, b));
        CHECK(t.rho_at(a, b) == oracle::rho_naive(*s, a, b));
        CHECK(t.delta_at(a, b) == s->delta(a, b));
        CHECK(oracle::delta_naive(*s, a, b) == s->delta(a, b));
        if (a != b) CHECK(oracle::bracket_naive(*s, a, b) == sq_bracket(*s, a, b));
      }
      for (Level k = 0; k <= s->K(); ++k) {
        CHECK(t.norm[k][a] == s->norm(a, k));
        CHECK(t.xi[k][a] == s->xi(a, k));
        CHECK(oracle::xi_naive(*s, a, k) == s->xi(a, k));
        CHECK(oracle::closure_naive(*s, a, k) == s->closure(a, k));
      }
    }
  }
}

TEST_CASE("the captured-system oracle agrees on every family of pairs") {
  const oracle::NaiveTables t = oracle::tabulate(k3());
  std::vector<FinSet> pairs;
  for (Ordinal a = 0; a < 6; ++a) {
    for (Ordinal b = a + 1; b < 6; ++b) pairs.push_back(FinSet{a, b});
  }
  std::vector<std::vector<FinSet>> families;
  for (Ordinal a = 0; a < 6; ++a) {
    for (Ordinal b = a + 1; b < 6; ++b) families.push_back({FinSet{a}, FinSet{b}});
  }
  for (const FinSet& p : pairs) {
    for (const FinSet& q : pairs) {
      if (p != q) families.push_back({p, q});
    }
  }
  std::size_t captured = 0;
  for (const auto& fam : families) {
    for (Level l = 0; l <= 4; ++l) {
      const bool want = oracle::captured_naive(t, fam, l);
      CHECK(oracle::captured_naive(k3(), fam, l) == want);
      bool fast = false;
      if (is_root_tail_tail(fam)) fast = is_captured(k3(), fam, l);
      CHECK(fast == want);
      captured += want;
    }
  }
  CHECK(captured > 0);
}

TEST_CASE("every captured K=3 pair, by hand") {
  const std::set<std::tuple<Ordinal, Ordinal, Level>> expected{{0, 1, 1}, {0, 2, 1}, {3, 4, 1}, {3, 5, 1}, {1, 2, 2},
                                                               {4, 5, 2}, {0, 3, 3}, {1, 4, 3}, {2, 5, 3}};
  std::set<std::tuple<Ordinal, Ordinal, Level>> got;
  for (Ordinal a = 0; a < 6; ++a) {
    for (Ordinal b = a + 1; b < 6; ++b) {
      for (Level l = 0; l <= 3; ++l) {
        if (oracle::captured_naive(k3(), {FinSet{a}, FinSet{b}}, l)) got.emplace(a, b, l);
      }
    }
  }
  CHECK(got == expected);
}

TEST_CASE("the oracle rejects what is not a root-tail-tail system") {
  CHECK_FALSE(oracle::captured_naive(k3(), {FinSet{0}}, 1));
  CHECK_FALSE(oracle::captured_naive(k3(), {FinSet{1}, FinSet{0}}, 1));
  CHECK_FALSE(oracle::captured_naive(k3(), {FinSet{0, 1}, FinSet{3}}, 3));
  CHECK_FALSE(oracle::captured_naive(k3(), {FinSet{0, 3}, FinSet{1, 4}}, 3));
}

TEST_CASE("naive Hausdorff sets and levels") {
  const Pregap h = oracle::hausdorff_naive(k3());
  CHECK(h.left[5] == FinSet{3, 5, 7});
  CHECK(h.right[5] == FinSet{2, 4, 6});
  CHECK(h.left[0] == FinSet{2, 6});
  CHECK(h.right[0] == FinSet{3, 7});

  const auto levels = oracle::levels_naive(k3().type());
  REQUIRE(levels.size() == 4);
  CHECK(levels[1] == std::set<oracle::Member>{{0, 1}, {0, 2}, {3, 4}, {3, 5}});
  CHECK(levels[3] == std::set<oracle::Member>{{0, 1, 2, 3, 4, 5}});
}
