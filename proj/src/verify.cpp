#include "schemelab/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "schemelab/capture.hpp"
#include "schemelab/error.hpp"
#include "schemelab/gaps.hpp"
#include "schemelab/oracle.hpp"
#include "schemelab/posets.hpp"
#include "schemelab/scheme.hpp"

namespace schemelab::verify {

namespace {

constexpr std::size_t kMaxMessages = 8;

struct Sink {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> messages;

  template <class What>
  void expect(bool ok, What&& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (messages.size() < kMaxMessages) messages.push_back(what());
  }

  void absorb(Sink&& other) {
    checks += other.checks;
    failures += other.failures;
    for (auto& m : other.messages) {
      if (messages.size() < kMaxMessages) messages.push_back(std::move(m));
    }
  }
};

// Runs body(i, sink) for i < count over striped workers and merges the sinks
// in index order, so the outcome does not depend on the thread count.
Sink parallel_sinks(std::size_t count, unsigned threads, const std::function<void(std::size_t, Sink&)>& body) {
  std::vector<Sink> parts(count);
  auto run = [&](std::size_t i) {
    try {
      body(i, parts[i]);
    } catch (const std::exception& e) {
      parts[i].expect(false, [&] { return std::string("exception: ") + e.what(); });
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) run(i);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < count; i += workers) run(i);
      });
    }
  }
  Sink all;
  for (auto& p : parts) all.absorb(std::move(p));
  return all;
}

std::string tag(const Scheme& s) { return "[" + s.type().str() + "] "; }

std::vector<TypeSequence> scheme_grid(const Options& opts) {
  auto grid = prefix_grid();
  auto extra = random_prefixes(opts.seed);
  grid.insert(grid.end(), extra.begin(), extra.end());
  return grid;
}

// ---------------------------------------------------------------------------
// 1. Type recursion

std::optional<Errc> first_violation(const std::vector<Triple>& t) {
  if (t.empty()) return Errc::EmptyPrefix;
  if (t[0].m != 1) return Errc::ViolatesA;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k].n < 2) return Errc::ViolatesB;
    if (t[k].r >= t[k].m) return Errc::ViolatesC;
    if (k + 1 < t.size() && t[k + 1].m != t[k].r + (t[k].m - t[k].r) * t[k].n) return Errc::ViolatesD;
  }
  return std::nullopt;
}

Sink suite_types(const Options& opts) {
  Sink sink;
  std::mt19937_64 rng(opts.seed);
  for (int i = 0; i < 200; ++i) {
    PrefixBounds b;
    b.K = 1 + static_cast<Level>(rng() % 8);
    b.max_n = 4;
    b.max_r = 1u << 20;
    b.max_m = 1u << 24;
    const TypeSequence t = random_type_prefix(b, rng);
    const auto& tr = t.triples();
    sink.expect(!first_violation(tr), [&] { return t.str() + " generated but violates (a)-(d)"; });
    sink.expect(make_type_prefix(tr) == t, [&] { return t.str() + " not idempotent"; });
    for (Level k = 0; k < t.K(); ++k) {
      sink.expect(t.m(k) < t.m(k + 1), [&] { return t.str() + " m not increasing at " + std::to_string(k); });
    }
    for (std::size_t j = 0; j < tr.size(); ++j) {
      for (int field = 0; field < 3; ++field) {
        for (int d : {-1, +1}) {
          std::vector<Triple> mut = tr;
          Natural& x = field == 0 ? mut[j].m : field == 1 ? mut[j].n : mut[j].r;
          if (x == 0 && d < 0) continue;
          x = static_cast<Natural>(static_cast<long long>(x) + d);
          const auto expected = first_violation(mut);
          std::optional<Errc> got;
          try {
            make_type_prefix(mut);
          } catch (const Error& e) {
            got = e.code();
          }
          sink.expect(got == expected, [&] {
            return t.str() + " mutated triple " + std::to_string(j) + " field " + std::to_string(field) +
                   (d < 0 ? " -1" : " +1") + ": acceptance disagrees with (a)-(d)";
          });
        }
      }
    }
  }
  return sink;
}

// ---------------------------------------------------------------------------
// 2. Scheme axioms

Scheme corrupted_k2() {
  const TypeSequence t = make_type_prefix({{1, 2, 0}, {2, 2, 1}});
  return Scheme::from_levels(t, {{{0}, {1}, {2}}, {{0, 1}, {1, 2}}, {{0, 1, 2}}});
}

Sink suite_axioms(const Options& opts) {
  const auto grid = scheme_grid(opts);
  Sink sink = parallel_sinks(grid.size(), opts.threads, [&](std::size_t i, Sink& out) {
    const Scheme s = Scheme::build(grid[i]);
    const auto report = verify_axioms(s);
    out.expect(report.empty(), [&] { return tag(s) + report.front().axiom + ": " + report.front().detail; });
  });
  if (opts.corrupt) {
    const auto report = verify_axioms(corrupted_k2());
    sink.expect(report.empty(), [&] { return "corrupted fixture: " + report.front().axiom + ": " + report.front().detail; });
  }
  return sink;
}

// ---------------------------------------------------------------------------
// 3. Canonical-function laws

void laws_for(const Scheme& s, Sink& out) {
  const Ordinal N = s.domain_size();
  const Level K = s.K();
  std::vector<std::vector<FinSet>> cl(N, std::vector<FinSet>(K + 1));
  for (Ordinal a = 0; a < N; ++a) {
    for (Level k = 0; k <= K; ++k) {
      cl[a][k] = s.closure(a, k);
      // om4, in the finite form: a closure fits inside one level-k member.
      out.expect(cl[a][k].size() <= s.type().m(k), [&] { return tag(s) + "om4 fails at " + std::to_string(a); });
    }
  }

  for (Ordinal a = 0; a < N; ++a) {
    for (Ordinal b = 0; b < N; ++b) {
      const Level rab = s.rho(a, b);
      out.expect((rab == 0) == (a == b), [&] { return tag(s) + "om1 fails at " + std::to_string(a) + "," + std::to_string(b); });
      out.expect(rab == s.rho(b, a), [&] { return tag(s) + "om2 fails at " + std::to_string(a) + "," + std::to_string(b); });
      if (a == b) continue;
      const Level dab = s.delta(a, b);
      out.expect(dab <= rab, [&] { return tag(s) + "Δ > ρ at " + std::to_string(a) + "," + std::to_string(b); });
      if (a < b) {
        for (Level k = rab; k <= K; ++k) {
          out.expect(s.norm(a, k) < s.norm(b, k),
                     [&] { return tag(s) + "dp1 fails at " + std::to_string(a) + "," + std::to_string(b); });
        }
        for (Level k = 1; k <= K; ++k) {
          const int xa = s.xi(a, k), xb = s.xi(b, k);
          if (k < dab) out.expect(xa == xb, [&] { return tag(s) + "lemma Ξ (a) fails"; });
          if (k == rab) out.expect(0 <= xa && xa < xb, [&] { return tag(s) + "lemma Ξ (b) fails"; });
          if (k > rab) out.expect(xa == -1 || xa == xb, [&] { return tag(s) + "lemma Ξ (c) fails"; });
          if (k == dab) out.expect(xa >= 0 && xb >= 0 && xa != xb, [&] { return tag(s) + "lemma Ξ (d) fails"; });
        }
      }
      // Increasing bijection between closures below Δ.
      for (Level k = 0; k < dab && k <= K; ++k) {
        const FinSet& A = cl[a][k];
        const FinSet& B = cl[b][k];
        out.expect(A.size() == B.size(), [&] { return tag(s) + "closures below Δ differ in size"; });
        if (A.size() != B.size()) continue;
        bool moved = false;
        Level last_rho = 0, last_delta = kTop;
        for (std::size_t i = 0; i < A.size(); ++i) {
          const Ordinal x = A(i), hx = B(i);
          if (x == hx) {
            out.expect(!moved, [&] { return tag(s) + "bijection lemma (a) fails"; });
            continue;
          }
          const Level r = s.rho(x, hx), d = s.delta(x, hx);
          out.expect(r >= last_rho && d <= last_delta && r >= d && rab >= r && d >= dab,
                     [&] { return tag(s) + "bijection lemma chain fails at " + std::to_string(a) + "," + std::to_string(b); });
          moved = true;
          last_rho = r;
          last_delta = d;
        }
      }
    }
  }

  if (N <= 128) {
    for (Ordinal a = 0; a < N; ++a) {
      for (Ordinal b = 0; b < N; ++b) {
        const Level dab = s.delta(a, b);
        for (Ordinal c = 0; c < N; ++c) {
          if (a <= std::min(b, c)) {
            out.expect(s.rho(a, b) <= std::max(s.rho(a, c), s.rho(b, c)), [&] {
              return tag(s) + "om3 fails at " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
            });
          }
          if (dab < s.delta(b, c)) {
            out.expect(dab == s.delta(a, c), [&] {
              return tag(s) + "dp2 fails at " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
            });
          }
        }
      }
    }
  }

  for (Level k = 0; k <= K; ++k) {
    for (const FinSet& F : s.level(k)) {
      out.expect(s.rho_set(F) == k, [&] { return tag(s) + "ρ^F ≠ k for {" + F.str() + "}"; });
      for (std::size_t pos = 0; pos < F.size(); ++pos) {
        const Ordinal a = F(pos);
        out.expect(cl[a][k] == F.below(a + 1),
                   [&] { return tag(s) + "(α)_k ≠ F ∩ (α+1) for α=" + std::to_string(a) + " k=" + std::to_string(k); });
        out.expect(s.norm(a, k) == pos, [&] { return tag(s) + "F(‖α‖_k) ≠ α"; });
        if (k >= 1) {
          const Natural r = s.type().r(k);
          const int expect_xi = pos < r ? -1 : static_cast<int>((pos - r) / (s.type().m(k - 1) - r));
          out.expect(s.xi(a, k) == expect_xi, [&] { return tag(s) + "Ξ depends on the containing member"; });
        }
      }
    }
  }
}

Sink suite_laws(const Options& opts) {
  const auto grid = scheme_grid(opts);
  return parallel_sinks(grid.size(), opts.threads, [&](std::size_t i, Sink& out) { laws_for(Scheme::build(grid[i]), out); });
}

// ---------------------------------------------------------------------------
// 4. Oracle equivalence

// Every root-tail-tail family of n in {2,3} members of common size c <= 3: pick
// r + n(c-r) increasing ordinals and cut them into root and consecutive tails.
template <class F>
void for_each_rtt_family(Ordinal N, F&& visit) {
  for (std::size_t c = 1; c <= 3; ++c) {
    for (std::size_t r = 0; r < c; ++r) {
      for (std::size_t n = 2; n <= 3; ++n) {
        const std::size_t t = c - r, total = r + n * t;
        if (total > N) continue;
        std::vector<Ordinal> pick(total);
        for (std::size_t i = 0; i < total; ++i) pick[i] = static_cast<Ordinal>(i);
        for (;;) {
          std::vector<FinSet> fam;
          for (std::size_t i = 0; i < n; ++i) {
            std::vector<Ordinal> m(pick.begin(), pick.begin() + r);
            m.insert(m.end(), pick.begin() + r + i * t, pick.begin() + r + (i + 1) * t);
            fam.emplace_back(std::move(m));
          }
          visit(fam);
          std::size_t i = total;
          while (i > 0 && pick[i - 1] == N - total + i - 1) --i;
          if (i == 0) break;
          ++pick[i - 1];
          for (std::size_t j = i; j < total; ++j) pick[j] = pick[j - 1] + 1;
        }
      }
    }
  }
}

bool fast_captured(const Scheme& s, const std::vector<FinSet>& fam, Level l) {
  // Screen out what is_captured would reject by throwing; throwing is slow.
  if (!is_root_tail_tail(fam)) return false;
  for (const FinSet& D : fam) {
    if (D.size() != fam.front().size()) return false;
  }
  try {
    return is_captured(s, fam, l);
  } catch (const Error& e) {
    if (e.code() != Errc::NotDeltaSystem) throw;
    return false;
  }
}

void compare_capture(const Scheme& s, const oracle::NaiveTables& T, const std::vector<FinSet>& fam, Sink& out) {
  for (Level l = 0; l <= s.K() + 1; ++l) {
    const bool naive = oracle::captured_naive(T, fam, l);
    out.expect(fast_captured(s, fam, l) == naive,
               [&] { return tag(s) + "is_captured disagrees on " + to_string(fam) + " at l=" + std::to_string(l); });
    if (l >= 1 && l <= s.K() && naive) {
      out.expect(is_fully_captured(s, fam, l) == (fam.size() == s.type().n(l)),
                 [&] { return tag(s) + "is_fully_captured disagrees on " + to_string(fam); });
    }
  }
}

void oracle_for(const Scheme& s, bool exhaustive_capture, const Options& opts, Sink& out) {
  const Ordinal N = s.domain_size();
  const Level K = s.K();

  const auto naive_levels = oracle::levels_naive(s.type());
  for (Level k = 0; k <= K; ++k) {
    std::set<oracle::Member> fast;
    for (const FinSet& F : s.level(k)) fast.emplace(F.begin(), F.end());
    out.expect(fast == naive_levels[k], [&] { return tag(s) + "level " + std::to_string(k) + " differs from the oracle"; });
  }

  const oracle::NaiveTables T = oracle::tabulate(s);
  for (Ordinal a = 0; a < N; ++a) {
    for (Ordinal b = 0; b < N; ++b) {
      const auto at = [&] { return std::to_string(a) + "," + std::to_string(b); };
      out.expect(s.rho(a, b) == T.rho_at(a, b), [&] { return tag(s) + "ρ disagrees at " + at(); });
      out.expect(s.delta(a, b) == T.delta_at(a, b), [&] { return tag(s) + "Δ disagrees at " + at(); });
      if (a < b) {
        const Level l = T.rho_at(a, b);
        Ordinal want = b;
        for (Ordinal x = a; x <= b; ++x) {
          if (T.rho_at(b, x) <= l - 1) {
            want = x;
            break;
          }
        }
        out.expect(sq_bracket(s, a, b) == want && sq_bracket_from_decomposition(s, a, b) == want,
                   [&] { return tag(s) + "bracket disagrees at " + at(); });
      }
    }
    for (Level k = 0; k <= K; ++k) {
      out.expect(s.norm(a, k) == T.norm[k][a], [&] { return tag(s) + "norm disagrees"; });
      out.expect(s.xi(a, k) == T.xi[k][a], [&] { return tag(s) + "Ξ disagrees"; });
    }
  }

  // The untabulated oracle entry points, where they are cheap enough.
  if (N <= 8) {
    for (Ordinal a = 0; a < N; ++a) {
      for (Ordinal b = 0; b < N; ++b) {
        out.expect(s.delta(a, b) == oracle::delta_naive(s, a, b), [&] { return tag(s) + "delta_naive disagrees"; });
        if (a < b) out.expect(sq_bracket(s, a, b) == oracle::bracket_naive(s, a, b), [&] { return tag(s) + "bracket_naive disagrees"; });
      }
      for (Level k = 0; k <= K; ++k) {
        out.expect(s.closure(a, k) == oracle::closure_naive(s, a, k), [&] { return tag(s) + "closure_naive disagrees"; });
        out.expect(s.norm(a, k) == oracle::norm_naive(s, a, k), [&] { return tag(s) + "norm_naive disagrees"; });
      }
    }
  }

  if (exhaustive_capture) {
    for_each_rtt_family(N, [&](const std::vector<FinSet>& fam) { compare_capture(s, T, fam, out); });
  }
  if (N <= 6) {
    // Every family of one to three non-empty sets, Δ-system or not, in both orders.
    std::vector<FinSet> subsets;
    for (std::uint32_t mask = 1; mask < (1u << N); ++mask) {
      std::vector<Ordinal> v;
      for (Ordinal x = 0; x < N; ++x) {
        if (mask >> x & 1) v.push_back(x);
      }
      subsets.emplace_back(std::move(v));
    }
    std::sort(subsets.begin(), subsets.end());
    const std::size_t M = subsets.size();
    for (std::size_t i = 0; i < M; ++i) {
      compare_capture(s, T, {subsets[i]}, out);
      for (std::size_t j = i + 1; j < M; ++j) {
        compare_capture(s, T, {subsets[i], subsets[j]}, out);
        compare_capture(s, T, {subsets[j], subsets[i]}, out);
        for (std::size_t k = j + 1; k < M; ++k) {
          compare_capture(s, T, {subsets[i], subsets[j], subsets[k]}, out);
          compare_capture(s, T, {subsets[k], subsets[j], subsets[i]}, out);
        }
      }
    }
  }
  if (N <= opts.capture_representative_domain) {
    std::mt19937_64 rng(opts.seed * 0x9e3779b97f4a7c15ULL + N * 131 + K);
    for (std::size_t i = 0; i < opts.capture_random_families; ++i) {
      std::vector<FinSet> fam(1 + rng() % 3);
      for (FinSet& D : fam) {
        std::vector<Ordinal> v(1 + rng() % 3);
        for (Ordinal& x : v) x = static_cast<Ordinal>(rng() % N);
        D = FinSet::from_unsorted(std::move(v));
      }
      const Level l = static_cast<Level>(rng() % (K + 2));
      out.expect(fast_captured(s, fam, l) == oracle::captured_naive(T, fam, l),
                 [&] { return tag(s) + "is_captured disagrees on random " + to_string(fam); });
    }
  }
}

Sink suite_oracle(const Options& opts) {
  std::vector<TypeSequence> grid;
  for (const auto& t : scheme_grid(opts)) {
    if (t.m(t.K()) <= 128) grid.push_back(t);
  }
  std::vector<bool> exhaustive(grid.size(), false);
  std::set<Natural> represented;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Natural N = grid[i].m(grid[i].K());
    if (N <= opts.capture_exhaustive_domain) {
      exhaustive[i] = true;
    } else if (N <= opts.capture_representative_domain && represented.insert(N).second) {
      exhaustive[i] = true;
    }
  }
  return parallel_sinks(grid.size(), opts.threads,
                        [&](std::size_t i, Sink& out) { oracle_for(Scheme::build(grid[i]), exhaustive[i], opts, out); });
}

// ---------------------------------------------------------------------------
// 5. Worked examples

FinSet h_naive(const Scheme& s, Ordinal a, Level n) {
  std::vector<Ordinal> out;
  for (Ordinal x = 0; x < a; ++x) {
    bool in = true;
    for (Level m = n + 1; m <= s.K(); ++m) {
      const int xa = oracle::xi_naive(s, a, m);
      if (xa != -1 && oracle::xi_naive(s, x, m) > xa) in = false;
    }
    if (in) out.push_back(x);
  }
  return FinSet(std::move(out));
}

Sink suite_examples(const Options& opts) {
  Sink sink;
  const Scheme k2 = Scheme::build(make_type_prefix({{1, 2, 0}, {2, 2, 1}}));
  const Scheme k3 = Scheme::build(make_type_prefix({{1, 2, 0}, {2, 2, 1}, {3, 2, 0}}));
  const Pregap g2 = hausdorff_gap(k2), g3 = hausdorff_gap(k3);
  const Pregap n2 = oracle::hausdorff_naive(k2), n3 = oracle::hausdorff_naive(k3);

  // Frozen values; each is also recomputed by the oracle.
  struct Golden {
    std::string what;
    std::string frozen;
    std::string fast;
    std::string naive;
  };
  const auto L = [](Level k) { return std::to_string(k); };
  const auto O = [](Ordinal x) { return std::to_string(x); };
  std::string level1_naive;
  const auto naive_levels = oracle::levels_naive(k2.type());
  for (const auto& F : naive_levels[1]) level1_naive += "{" + FinSet(std::vector<Ordinal>(F.begin(), F.end())).str() + "}";
  std::string level1_fast;
  for (const FinSet& F : k2.level(1)) level1_fast += "{" + F.str() + "}";

  std::vector<Golden> golden{
      {"K=2 F_1", "{0 1}{0 2}", level1_fast, level1_naive},
      {"K=2 rho(1,2)", opts.corrupt ? "1" : "2", L(k2.rho(1, 2)), L(oracle::rho_naive(k2, 1, 2))},
      {"K=2 delta(1,2)", "2", L(k2.delta(1, 2)), L(oracle::delta_naive(k2, 1, 2))},
      {"K=2 xi_2(2)", "1", std::to_string(k2.xi(2, 2)), std::to_string(oracle::xi_naive(k2, 2, 2))},
      {"K=2 L_2", "3 5", g2.left[2].str(), n2.left[2].str()},
      {"K=2 R_2", "2 4", g2.right[2].str(), n2.right[2].str()},
      {"K=2 [1,2]", "2", O(sq_bracket(k2, 1, 2)), O(oracle::bracket_naive(k2, 1, 2))},
      {"K=2 H_0(2)", "0 1", h_ideal_generator(k2, 2, 0).str(), h_naive(k2, 2, 0).str()},
      {"K=3 rho(2,5)", "3", L(k3.rho(2, 5)), L(oracle::rho_naive(k3, 2, 5))},
      {"K=3 [2,5]", "3", O(sq_bracket(k3, 2, 5)), O(oracle::bracket_naive(k3, 2, 5))},
      {"K=3 L_5", "3 5 7", g3.left[5].str(), n3.left[5].str()},
      {"K=3 L_2 ∩ R_5", "6", g3.left[2].intersect(g3.right[5]).str(), n3.left[2].intersect(n3.right[5]).str()},
  };
  for (const Golden& g : golden) {
    sink.expect(g.fast == g.frozen && g.naive == g.frozen, [&] {
      return g.what + ": frozen " + g.frozen + ", computed " + g.fast + ", oracle " + g.naive;
    });
  }
  return sink;
}

// ---------------------------------------------------------------------------
// 6. Gap laws

void gaps_for(const Scheme& s, Sink& out) {
  if (!s.type().is_two_type()) {
    bool rejected = false;
    try {
      hausdorff_gap(s);
    } catch (const Error& e) {
      rejected = e.code() == Errc::NotTwoScheme;
    }
    out.expect(rejected, [&] { return tag(s) + "Hausdorff construction accepted a fan-out above 2"; });
    return;
  }
  const Pregap g = hausdorff_gap(s);
  const Pregap naive = oracle::hausdorff_naive(s);
  out.expect(g.left == naive.left && g.right == naive.right, [&] { return tag(s) + "gap differs from the oracle"; });
  out.expect(g.is_normal(), [&] { return tag(s) + "gap not normal"; });

  auto report = [&](const char* name, const std::vector<GapViolation>& vs) {
    out.expect(vs.empty(), [&] {
      return tag(s) + name + ": " + vs.front().check + " at " + std::to_string(vs.front().alpha) + "," +
             std::to_string(vs.front().beta) + " " + vs.front().detail;
    });
  };
  report("interhausdorff", check_interhausdorff(s, g));
  report("hausdorff condition", check_hausdorff_condition(s, g));
  report("levelwise even/odd", check_levelwise_even_odd(s, g));
  report("tower/capture", check_tower_and_capture(s, g));

  const Level K = s.K();
  for (std::uint32_t mask = 0; mask < (1u << K); ++mask) {
    std::set<Level> p0, p1;
    for (Level k = 1; k <= K; ++k) (mask >> (k - 1) & 1 ? p0 : p1).insert(k);
    report("todorcevic laws", check_todorcevic_capture_laws(s, todorcevic_restrict(s, g, p0), p0, p1));
  }
}

Pregap corrupted_gap(const Scheme& k3) {
  Pregap g = hausdorff_gap(k3);
  g.left[5] = g.left[5].unite(g.right[5]);  // breaks normality and point (1)
  return g;
}

Sink suite_gaps(const Options& opts) {
  const auto grid = scheme_grid(opts);
  Sink sink = parallel_sinks(grid.size(), opts.threads, [&](std::size_t i, Sink& out) { gaps_for(Scheme::build(grid[i]), out); });
  if (opts.corrupt) {
    const Scheme k3 = Scheme::build(make_type_prefix({{1, 2, 0}, {2, 2, 1}, {3, 2, 0}}));
    const auto vs = check_interhausdorff(k3, corrupted_gap(k3));
    sink.expect(vs.empty(), [&] { return "corrupted fixture: interhausdorff " + vs.front().check + " " + vs.front().detail; });
  }
  return sink;
}

// ---------------------------------------------------------------------------
// 7. Poset laws

std::vector<FinSet> all_subsets(const FinSet& U) {
  std::vector<FinSet> out;
  for (std::uint32_t mask = 0; mask < (1u << U.size()); ++mask) {
    std::vector<Ordinal> v;
    for (std::size_t i = 0; i < U.size(); ++i) {
      if (mask >> i & 1) v.push_back(U(i));
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

std::vector<SepCondition> all_maps(const FinSet& U, std::size_t max_dom, Natural max_value) {
  std::vector<SepCondition> out;
  for (const FinSet& dom : all_subsets(U)) {
    if (dom.size() > max_dom) continue;
    std::vector<Natural> vals(dom.size(), 0);
    for (;;) {
      SepCondition p;
      for (std::size_t i = 0; i < dom.size(); ++i) p.emplace(dom(i), vals[i]);
      out.push_back(std::move(p));
      std::size_t i = 0;
      while (i < vals.size() && vals[i] == max_value) vals[i++] = 0;
      if (i == vals.size()) break;
      ++vals[i];
    }
  }
  return out;
}

std::vector<SepCondition> restrictions(const SepCondition& p) {
  std::vector<SepCondition> out;
  for (const FinSet& dom : all_subsets(condition_support(p))) {
    SepCondition q;
    for (Ordinal a : dom) q.emplace(a, p.at(a));
    out.push_back(std::move(q));
  }
  return out;
}

void filter_checks(const Pregap& d, const std::string& label, Sink& out) {
  const PosetView sep = PosetView::over_pregap(PosetKind::SEP, d);
  const FilterResult f = greedy_filter(sep, dense_meet_targets(sep, d.index), SepCondition{});
  out.expect(f.complete, [&] { return label + " greedy filter failed: " + f.failure; });
  if (!f.complete) return;
  for (Ordinal b : d.index) {
    out.expect(DenseTarget{b}.met_by(f.last()), [&] { return label + " filter misses M_" + std::to_string(b); });
  }
  for (std::size_t i = 0; i < f.chain.size(); ++i) {
    for (std::size_t j = i + 1; j < f.chain.size(); ++j) {
      out.expect(compatible(sep, f.chain[i], f.chain[j]), [&] { return label + " filter not pairwise compatible"; });
    }
  }
  const SeparatingFunction s = extract_separating(sep, f);
  out.expect(validate_separating(d, s), [&] { return label + " extracted function does not separate"; });
  const FinSet C = set_from_separating(d, s);
  for (std::size_t i = 0; i < d.size(); ++i) {
    out.expect(d.left[i].minus(FinSet::range(0, s.left[i] + 1)).subset_of(C), [&] { return label + " C misses a left tail"; });
    out.expect(!d.right[i].minus(FinSet::range(0, s.right[i] + 1)).intersects(C), [&] { return label + " C meets a right tail"; });
  }
}

Sink suite_posets(const Options&) {
  Sink out;
  auto k3 = std::make_shared<const Scheme>(Scheme::build(make_type_prefix({{1, 2, 0}, {2, 2, 1}, {3, 2, 0}})));
  const Pregap h = hausdorff_gap(*k3);
  const Pregap d = levelwise_diff(h, FinSet::range(0, static_cast<Ordinal>(h.size())));

  std::vector<PosetView> views;
  for (PosetKind kind : {PosetKind::SEP, PosetKind::CHI0, PosetKind::CHI1, PosetKind::BIORTH}) {
    views.push_back(PosetView::over_pregap(kind, d));
  }
  for (const std::set<Level>& A : {std::set<Level>{3}, std::set<Level>{2}, std::set<Level>{1, 2, 3}}) {
    views.push_back(PosetView::dn(k3, 2, A));
    views.push_back(PosetView::dn(k3, 3, A));
  }

  for (const PosetView& v : views) {
    const std::string label = poset_kind_name(v.kind());
    out.expect(is_condition(v, v.empty_condition()), [&] { return label + ": empty condition rejected"; });
    if (v.kind() == PosetKind::SEP) {
      const auto maps = all_maps(v.universe(), v.universe().size(), 3);
      for (const SepCondition& p : maps) {
        if (!is_condition(v, p)) continue;
        for (const SepCondition& q : restrictions(p)) {
          out.expect(is_condition(v, q), [&] { return label + ": restriction of " + condition_str(p) + " rejected"; });
        }
      }
      std::vector<SepCondition> small;
      for (const auto& p : all_maps(v.universe(), 2, 2)) {
        if (is_condition(v, p)) small.push_back(p);
      }
      for (const auto& p : small) {
        out.expect(compatible(v, p, p), [&] { return label + ": condition incompatible with itself"; });
        for (const auto& q : small) {
          out.expect(compatible(v, p, q) == compatible(v, q, p), [&] { return label + ": compatibility not symmetric"; });
        }
      }
    } else {
      const auto sets = all_subsets(v.universe());
      std::vector<FinSet> conds;
      for (const FinSet& p : sets) {
        if (!is_condition(v, p)) continue;
        conds.push_back(p);
        for (const FinSet& q : all_subsets(p)) {
          out.expect(is_condition(v, q), [&] { return label + ": subset of {" + p.str() + "} rejected"; });
        }
      }
      for (const FinSet& p : conds) {
        out.expect(compatible(v, p, p), [&] { return label + ": condition incompatible with itself"; });
        for (const FinSet& q : conds) {
          out.expect(compatible(v, p, q) == compatible(v, q, p), [&] { return label + ": compatibility not symmetric"; });
        }
      }
    }
  }

  // CHI0 / CHI1 complementarity on pairs.
  const PosetView chi0 = PosetView::over_pregap(PosetKind::CHI0, d);
  const PosetView chi1 = PosetView::over_pregap(PosetKind::CHI1, d);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const FinSet pair{d.index(i), d.index(j)};
      const bool meet = d.left[i].intersects(d.right[j]) || d.left[j].intersects(d.right[i]);
      out.expect(is_condition(chi1, pair) == meet && is_condition(chi0, pair) == !meet,
                 [&] { return "CHI0/CHI1 not complementary on {" + pair.str() + "}"; });
    }
  }

  // CHI1 over the Hausdorff gap: captured pairs of singletons are compatible.
  const PosetView chi1h = PosetView::over_pregap(PosetKind::CHI1, h);
  for (Ordinal a = 0; a < k3->domain_size(); ++a) {
    for (Ordinal b = a + 1; b < k3->domain_size(); ++b) {
      if (!is_captured_pair(*k3, a, b, k3->rho(a, b))) continue;
      out.expect(compatible(chi1h, FinSet{a}, FinSet{b}), [&] { return "CHI1: captured pair " + std::to_string(a) + "," + std::to_string(b) + " incompatible"; });
    }
  }

  // Filters, separating functions and the derived set.
  filter_checks(d, "K=3", out);
  const Scheme k2 = Scheme::build(make_type_prefix({{1, 2, 0}, {2, 2, 1}}));
  const Pregap h2 = hausdorff_gap(k2);
  filter_checks(levelwise_diff(h2, FinSet::range(0, static_cast<Ordinal>(h2.size()))), "K=2", out);

  // SEP compatibility law over every pair of small conditions; the captured
  // blocks among them are exactly the pairs the law speaks about.
  const PosetView sep = PosetView::over_pregap(PosetKind::SEP, d);
  std::vector<SepCondition> conds;
  for (const auto& p : all_maps(d.index, 3, 2)) {
    if (!p.empty() && is_condition(sep, p)) conds.push_back(p);
  }
  std::vector<std::pair<SepCondition, SepCondition>> pairs;
  for (const auto& p : conds) {
    for (const auto& q : conds) pairs.emplace_back(p, q);
  }
  // Pairs seeded from the capture search: singleton conditions on captured
  // indices, with every value the law could speak about.
  const auto found = find_captured_tuples(*k3, d.index, 2, {});
  out.expect(!found.certificates.empty(), [&] { return "no captured pairs among the difference indices"; });
  for (const auto& cert : found.certificates) {
    for (Natural value = 0; value + 1 < cert.level; ++value) {
      pairs.push_back({{{cert.members[0].min(), value}}, {{cert.members[1].min(), value}}});
    }
  }
  const CaptureLawReport sep_law = check_sep_capture_law(sep, *k3, pairs);
  out.expect(sep_law.ok(), [&] { return "SEP law: " + sep_law.counterexamples.front(); });
  out.expect(sep_law.applicable > conds.size(), [&] { return "SEP law never applied beyond p = q"; });

  std::vector<FinSet> small_sets;
  for (const FinSet& p : all_subsets(k3->domain())) {
    if (!p.empty() && p.size() <= 2) small_sets.push_back(p);
  }
  for (const std::set<Level>& A : {std::set<Level>{3}, std::set<Level>{2}, std::set<Level>{1, 2, 3}}) {
    const PosetView dn = PosetView::dn(k3, 2, A);
    std::vector<DnQuad> quads;
    for (const auto& a : small_sets) {
      for (const auto& b : small_sets) {
        if (!is_root_tail_tail({a, b})) continue;
        for (const auto& c : small_sets) {
          if (!is_root_tail_tail({a, b, c})) continue;
          for (const auto& e : small_sets) {
            if (is_root_tail_tail({a, b, c, e})) quads.push_back({a, b, c, e});
          }
        }
      }
    }
    const CaptureLawReport dn_law = check_dn_capture_law(dn, quads);
    out.expect(dn_law.ok(), [&] { return "DN law: " + dn_law.counterexamples.front(); });
    out.expect(dn_law.applicable > 0, [&] { return "DN law never applied"; });
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"types", "axioms", "laws", "oracle", "examples", "gaps", "posets"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<TypeSequence> prefix_grid() {
  std::vector<TypeSequence> out;
  for (Level K = 1; K <= 4; ++K) {
    auto part = enumerate_type_prefixes(K, 3, 200);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<TypeSequence> random_prefixes(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed ^ 0x5eed5eedULL);
  std::vector<TypeSequence> out;
  for (std::size_t i = 0; i < count; ++i) {
    PrefixBounds b;
    b.K = 1 + static_cast<Level>(rng() % 6);
    b.max_n = 3;
    b.max_r = 1u << 20;
    b.max_m = 512;
    out.push_back(random_type_prefix(b, rng));
  }
  return out;
}

SuiteResult run_suite(const std::string& name, const Options& opts) {
  static const std::map<std::string, std::pair<std::string, std::function<Sink(const Options&)>>> suites{
      {"types", {"type recursion", suite_types}},
      {"axioms", {"scheme axioms", suite_axioms}},
      {"laws", {"canonical-function laws", suite_laws}},
      {"oracle", {"oracle equivalence", suite_oracle}},
      {"examples", {"worked examples", suite_examples}},
      {"gaps", {"gap laws", suite_gaps}},
      {"posets", {"poset laws", suite_posets}},
  };
  auto it = suites.find(name);
  if (it == suites.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  SuiteResult r;
  r.name = name;
  r.title = it->second.first;
  Sink sink;
  try {
    sink = it->second.second(opts);
  } catch (const std::exception& e) {
    sink.expect(false, [&] { return std::string("exception: ") + e.what(); });
  }
  r.checks = sink.checks;
  r.failures = sink.failures;
  r.messages = std::move(sink.messages);
  r.passed = sink.failures == 0;
  return r;
}

}  // namespace schemelab::verify
