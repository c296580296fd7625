#include <doctest.h>

#include "fixtures.hpp"
#include "schemelab/capture.hpp"
#include "schemelab/error.hpp"
#include "schemelab/export.hpp"
#include "schemelab/gaps.hpp"
#include "schemelab/oracle.hpp"

using namespace schemelab;
using fixtures::k2;
using fixtures::k3;

namespace {

Pregap subgap(const Pregap& g, const FinSet& positions) {
  Pregap out;
  out.provenance = g.provenance;
  std::vector<Ordinal> idx;
  for (Ordinal p : positions) {
    idx.push_back(g.index(p));
    out.left.push_back(g.left[p]);
    out.right.push_back(g.right[p]);
    out.anchors.push_back(g.anchors[p]);
  }
  out.index = FinSet(std::move(idx));
  return out;
}

Pregap raw(std::vector<FinSet> left, std::vector<FinSet> right) {
  Pregap g;
  g.index = FinSet::range(0, static_cast<Ordinal>(left.size()));
  for (Ordinal i = 0; i < left.size(); ++i) g.anchors.push_back(FinSet{i});
  g.left = std::move(left);
  g.right = std::move(right);
  return g;
}

std::vector<Scheme> two_schemes() {
  std::vector<Scheme> out;
  for (const Scheme& s : fixtures::small_schemes()) {
    if (s.type().is_two_type()) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("Hausdorff gap tables") {
  const Pregap g = hausdorff_gap(k2());
  CHECK(g.left[2] == FinSet{3, 5});
  CHECK(g.right[2] == FinSet{2, 4});
  CHECK(g.left[1] == FinSet{3, 4});
  CHECK(g.right[1] == FinSet{2, 5});
  CHECK(g.left[0] == FinSet{2});
  CHECK(g.right[0] == FinSet{3});
  CHECK(g.is_normal());
  CHECK(g.provenance == Provenance::Hausdorff);

  const Pregap g3 = hausdorff_gap(k3());
  CHECK(g3.left[5] == FinSet{3, 5, 7});
  CHECK(g3.right[5] == FinSet{2, 4, 6});
  CHECK(g3.left[2].intersect(g3.right[5]) == FinSet{6});

  for (const Scheme* s : {&k2(), &k3()}) {
    const Pregap naive = oracle::hausdorff_naive(*s);
    CHECK(hausdorff_gap(*s).left == naive.left);
    CHECK(hausdorff_gap(*s).right == naive.right);
  }
  CHECK(gap_csv(g) == "alpha,L,R\n0,2,3\n1,3 4,2 5\n2,3 5,2 4\n");

  const Scheme fan3 = Scheme::build(make_type_prefix({{1, 3, 0}}));
  CHECK_THROWS_AS(hausdorff_gap(fan3), Error);
}

TEST_CASE("windows") {
  CHECK(n_window(0) == FinSet{0, 1});
  CHECK(n_window(2) == FinSet::range(0, 6));
  CHECK(n_window(3) == FinSet::range(0, 8));
  CHECK(FinSet{6}.subset_of(n_window(k3().rho(2, 5))));
}

TEST_CASE("gap checks pass on every small 2-scheme") {
  const auto schemes = two_schemes();
  CHECK(schemes.size() > 5);
  for (const Scheme& s : schemes) {
    const Pregap g = hausdorff_gap(s);
    CHECK(check_interhausdorff(s, g).empty());
    CHECK(check_hausdorff_condition(s, g).empty());
    CHECK(check_levelwise_even_odd(s, g).empty());
    CHECK(check_tower_and_capture(s, g).empty());
  }
}

TEST_CASE("corrupted pregaps are reported") {
  Pregap g = hausdorff_gap(k3());
  g.left[5] = g.left[5].unite(g.right[5]);
  CHECK_FALSE(g.is_normal());
  CHECK_FALSE(check_interhausdorff(k3(), g).empty());

  Pregap h = hausdorff_gap(k3());
  h.right[4] = FinSet{};
  CHECK_FALSE(check_hausdorff_condition(k3(), h).empty());
}

TEST_CASE("levelwise differences") {
  const Pregap g = hausdorff_gap(k2());
  const Pregap d = levelwise_diff(g, FinSet{0, 1, 2});
  CHECK(d.provenance == Provenance::LevelwiseDifference);
  CHECK(d.index == FinSet{0, 1});
  const Pregap naive = oracle::hausdorff_naive(k2());
  CHECK(d.left[0] == naive.left[1].minus(naive.left[0]));
  CHECK(d.left[0] == FinSet{3, 4});
  CHECK(d.right[0] == FinSet{2, 5});
  CHECK(d.left[1] == FinSet{5});
  CHECK(d.right[1] == FinSet{4});
  CHECK(d.anchors[1] == FinSet{1, 2});

  const Pregap skip = levelwise_diff(g, FinSet{0, 2});
  CHECK(skip.left[0] == naive.left[2].minus(naive.left[0]));

  CHECK_THROWS_AS(levelwise_diff(g, FinSet{1}), Error);
  CHECK_THROWS_AS(levelwise_diff(g, FinSet{0, 7}), Error);
}

TEST_CASE("the even/odd window is needed") {
  // L_1 \ L_0 = {3, 4} holds the odd 3, which sits inside N_{ρ(0,1)} = N_1.
  const Pregap g = hausdorff_gap(k2());
  const FinSet diff = g.left[1].minus(g.left[0]);
  CHECK(diff.contains(3));
  CHECK(diff.minus(n_window(k2().rho(0, 1))) == FinSet{4});
  CHECK(diff.minus(n_window(0)).contains(3));
}

TEST_CASE("Todorcevic restriction") {
  const Pregap g = hausdorff_gap(k3());
  const Pregap all = todorcevic_restrict(k3(), g, {1, 2, 3});
  CHECK(all.left == g.left);
  CHECK(all.right == g.right);
  CHECK(all.provenance == Provenance::TodorcevicRestricted);

  const Pregap none = todorcevic_restrict(k3(), g, {});
  for (std::size_t i = 0; i < none.size(); ++i) {
    CHECK(none.left[i].empty());
    CHECK(none.right[i].empty());
  }

  const Pregap top = todorcevic_restrict(k3(), g, {3});
  CHECK(top.left[5] == FinSet{7});
  CHECK(top.right[5] == FinSet{6});
  CHECK(top.left[2].intersect(top.right[5]) == FinSet{6});
  CHECK(check_todorcevic_capture_laws(k3(), top, {3}, {1, 2}).empty());

  const Pregap mid = todorcevic_restrict(k3(), g, {2});
  CHECK(is_captured_pair(k3(), 2, 5, 3));
  CHECK(mid.left[2].subset_of(mid.left[5]));
  CHECK(mid.right[2].subset_of(mid.right[5]));
  CHECK(check_todorcevic_capture_laws(k3(), mid, {2}, {1, 3}).empty());

  // A law that is wrong on purpose: claim level 3 behaves like P1 under the P0={3} restriction.
  CHECK_FALSE(check_todorcevic_capture_laws(k3(), top, {}, {3}).empty());

  const Scheme k1 = Scheme::build(make_type_prefix({{1, 2, 0}}));
  const Pregap single = subgap(hausdorff_gap(k1), FinSet{0});
  CHECK(check_todorcevic_capture_laws(k1, single, {1}, {}).empty());

  for (const Scheme& s : two_schemes()) {
    for (std::uint32_t mask = 0; mask < (1u << s.K()); ++mask) {
      std::set<Level> p0, p1;
      for (Level k = 1; k <= s.K(); ++k) (mask >> (k - 1) & 1 ? p0 : p1).insert(k);
      CHECK(check_todorcevic_capture_laws(s, todorcevic_restrict(s, hausdorff_gap(s), p0), p0, p1).empty());
    }
  }
}

TEST_CASE("biorthogonality") {
  const Pregap g = hausdorff_gap(k3());
  // Every pair inside {0, 1, 2} is captured.
  for (Ordinal a = 0; a < 3; ++a) {
    for (Ordinal b = a + 1; b < 3; ++b) CHECK(is_captured_pair(k3(), a, b, k3().rho(a, b)));
  }
  CHECK(is_biorthogonal(subgap(g, FinSet{0, 1, 2})));
  CHECK(is_biorthogonal(subgap(g, FinSet{4})));

  const Pregap flat = raw({FinSet{0}, FinSet{0}}, {FinSet{1}, FinSet{1}});
  CHECK_FALSE(is_biorthogonal(flat));
  CHECK_THROWS_AS(is_biorthogonal(raw({FinSet{0}}, {FinSet{0}})), Error);
}

TEST_CASE("separating functions and the set they define") {
  const Pregap g = hausdorff_gap(k3());
  const std::size_t n = g.size();
  const SeparatingFunction big{std::vector<Natural>(n, 100), std::vector<Natural>(n, 100)};
  CHECK(validate_separating(g, big));
  const SeparatingFunction zero{std::vector<Natural>(n, 0), std::vector<Natural>(n, 0)};
  const Pregap bi = subgap(g, FinSet{0, 1, 2});
  CHECK_FALSE(validate_separating(bi, SeparatingFunction{{0, 0, 0}, {0, 0, 0}}));
  CHECK_FALSE(validate_separating(g, zero));
  CHECK_FALSE(validate_separating(g, SeparatingFunction{{1}, {1}}));

  // A constant threshold above every element leaves nothing for C.
  const Pregap d = levelwise_diff(hausdorff_gap(k2()), FinSet{0, 1, 2});
  const SeparatingFunction high{{6, 6}, {6, 6}};
  REQUIRE(validate_separating(d, high));
  CHECK(set_from_separating(d, high).empty());
  const SeparatingFunction low{{3, 4}, {6, 6}};
  REQUIRE(validate_separating(d, low));
  CHECK(set_from_separating(d, low) == FinSet{4, 5});

  const Pregap empty_left = raw({FinSet{}, FinSet{}}, {FinSet{4}, FinSet{5}});
  CHECK(set_from_separating(empty_left, SeparatingFunction{{0, 0}, {0, 0}}).empty());

  CHECK_THROWS_AS(set_from_separating(g, zero), Error);
}
