#include "schemelab/oracle.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace schemelab::oracle {

namespace {

bool holds(const FinSet& F, Ordinal x) { return std::find(F.begin(), F.end(), x) != F.end(); }

// Children of a level-k member: the first r elements are shared, the rest are
// dealt out in runs of m_{k-1} - r.
std::vector<Member> deal(const TypeSequence& t, Level k, const std::vector<Ordinal>& F) {
  const Natural r = t.r(k);
  const Natural run = t.m(k - 1) - r;
  std::vector<Member> out(t.n(k), Member(F.begin(), F.begin() + r));
  std::size_t next = r;
  for (auto& child : out) {
    for (Natural j = 0; j < run && next < F.size(); ++j) child.insert(F[next++]);
  }
  return out;
}

}  // namespace

std::vector<std::set<Member>> levels_naive(const TypeSequence& t) {
  std::vector<std::set<Member>> out(t.K() + 1);
  Member top;
  for (Ordinal x = 0; x < t.m(t.K()); ++x) top.insert(x);
  out[t.K()].insert(top);
  for (Level k = t.K(); k > 0; --k) {
    for (const Member& F : out[k]) {
      for (Member& c : deal(t, k, std::vector<Ordinal>(F.begin(), F.end()))) out[k - 1].insert(std::move(c));
    }
  }
  return out;
}

Level rho_naive(const Scheme& s, Ordinal a, Ordinal b) {
  for (Level k = 0; k <= s.K(); ++k) {
    for (const FinSet& F : s.level(k)) {
      if (holds(F, a) && holds(F, b)) return k;
    }
  }
  return kTop;
}

FinSet closure_naive(const Scheme& s, Ordinal a, Level k) {
  std::vector<Ordinal> out;
  for (Ordinal x = 0; x <= a; ++x) {
    if (rho_naive(s, a, x) <= k) out.push_back(x);
  }
  return FinSet(std::move(out));
}

Natural norm_naive(const Scheme& s, Ordinal a, Level k) {
  return static_cast<Natural>(closure_naive(s, a, k).size() - 1);
}

Level delta_naive(const Scheme& s, Ordinal a, Ordinal b) {
  std::vector<Natural> na, nb;
  for (Level k = 0; k <= s.K(); ++k) {
    na.push_back(norm_naive(s, a, k));
    nb.push_back(norm_naive(s, b, k));
  }
  const auto diff = std::mismatch(na.begin(), na.end(), nb.begin());
  return diff.first == na.end() ? kTop : static_cast<Level>(std::distance(na.begin(), diff.first));
}

int xi_naive(const Scheme& s, Ordinal a, Level k) {
  if (k == 0) return 0;
  bool seen = false;
  int value = 0;
  for (const FinSet& F : s.level(k)) {
    if (!holds(F, a)) continue;
    const std::vector<Ordinal> elems(F.begin(), F.end());
    const auto children = deal(s.type(), k, elems);
    const Member root(elems.begin(), elems.begin() + s.type().r(k));
    int here = -1;
    if (!root.contains(a)) {
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (children[i].contains(a)) here = static_cast<int>(i);
      }
    }
    if (seen && here != value) throw std::logic_error("Ξ depends on the containing member");
    seen = true;
    value = here;
  }
  if (!seen) throw std::logic_error("no member holds the ordinal");
  return value;
}

Level NaiveTables::delta_at(Ordinal a, Ordinal b) const {
  for (Level k = 0; k <= K; ++k) {
    if (norm[k][a] != norm[k][b]) return k;
  }
  return kTop;
}

NaiveTables tabulate(const Scheme& s) {
  NaiveTables t;
  t.size = s.domain_size();
  t.K = s.K();
  const Ordinal N = t.size;

  // ρ: walk the levels upwards and stamp every pair inside each member the
  // first time it is seen together.
  t.rho.assign(static_cast<std::size_t>(N) * N, kTop);
  for (Level k = 0; k <= t.K; ++k) {
    for (const FinSet& F : s.level(k)) {
      for (Ordinal a : F) {
        for (Ordinal b : F) {
          Level& cell = t.rho[static_cast<std::size_t>(a) * N + b];
          if (cell == kTop) cell = k;
        }
      }
    }
  }

  t.norm.assign(t.K + 1, std::vector<Natural>(N, 0));
  for (Level k = 0; k <= t.K; ++k) {
    for (Ordinal a = 0; a < N; ++a) {
      Natural below = 0;
      for (Ordinal x = 0; x < a; ++x) below += t.rho_at(a, x) <= k;
      t.norm[k][a] = below;
    }
  }

  // Ξ: deal every member once and record each element's child index,
  // insisting that all containing members agree.
  t.xi.assign(t.K + 1, std::vector<int>(N, 0));
  for (Level k = 1; k <= t.K; ++k) {
    std::vector<bool> seen(N, false);
    for (const FinSet& F : s.level(k)) {
      const std::vector<Ordinal> elems(F.begin(), F.end());
      const auto children = deal(s.type(), k, elems);
      const Member root(elems.begin(), elems.begin() + s.type().r(k));
      for (Ordinal a : elems) {
        int here = -1;
        if (!root.contains(a)) {
          for (std::size_t i = 0; i < children.size(); ++i) {
            if (children[i].contains(a)) here = static_cast<int>(i);
          }
        }
        if (seen[a] && t.xi[k][a] != here) throw std::logic_error("Ξ depends on the containing member");
        seen[a] = true;
        t.xi[k][a] = here;
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw std::logic_error("no member holds an ordinal");
  }
  return t;
}

namespace {

// Shared clause walk; the lookups decide where Ξ, ρ and Δ come from.
template <class Xi, class Rho, class Delta>
bool captured_clauses(std::size_t K, const std::vector<FinSet>& family, Level l, Xi xi, Rho rho, Delta delta) {
  const std::size_t n = family.size();
  if (n < 2 || l == 0 || l > K) return false;
  const std::size_t m = family[0].size();
  for (const FinSet& D : family) {
    if (D.size() != m) return false;
  }

  // Δ-system: one common pairwise intersection, no repeated members.
  std::vector<Ordinal> R;
  std::set_intersection(family[0].begin(), family[0].end(), family[1].begin(), family[1].end(),
                        std::back_inserter(R));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (family[i] == family[j]) return false;
      std::vector<Ordinal> common;
      std::set_intersection(family[i].begin(), family[i].end(), family[j].begin(), family[j].end(),
                            std::back_inserter(common));
      if (common != R) return false;
    }
  }
  const std::size_t r = R.size();

  // Root-tail-tail: the root is the first r elements of every member, below
  // every tail, and the tails follow one another in list order.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < r; ++a) {
      if (family[i](a) != R[a]) return false;
    }
    if (i + 1 < n && m > r && family[i](m - 1) >= family[i + 1](r)) return false;
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < m; ++a) {
      const int want = a < r ? -1 : static_cast<int>(i);
      if (xi(family[i](a), l) != want) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t a = r; a < m; ++a) {
        if (rho(family[i](a), family[j](a)) != l) return false;
        if (delta(family[i](a), family[j](a)) != l) return false;
      }
    }
  }
  return true;
}

bool in_domain(Ordinal size, const std::vector<FinSet>& family) {
  for (const FinSet& D : family) {
    if (!D.empty() && D.max() >= size) return false;
  }
  return true;
}

}  // namespace

bool captured_naive(const Scheme& s, const std::vector<FinSet>& family, Level l) {
  if (!in_domain(s.domain_size(), family)) return false;
  return captured_clauses(
      s.K(), family, l, [&](Ordinal a, Level k) { return xi_naive(s, a, k); },
      [&](Ordinal a, Ordinal b) { return rho_naive(s, a, b); }, [&](Ordinal a, Ordinal b) { return delta_naive(s, a, b); });
}

bool captured_naive(const NaiveTables& t, const std::vector<FinSet>& family, Level l) {
  if (!in_domain(t.size, family)) return false;
  return captured_clauses(
      t.K, family, l, [&](Ordinal a, Level k) { return t.xi[k][a]; },
      [&](Ordinal a, Ordinal b) { return t.rho_at(a, b); }, [&](Ordinal a, Ordinal b) { return t.delta_at(a, b); });
}

Pregap hausdorff_naive(const Scheme& s) {
  Pregap g;
  g.provenance = Provenance::Hausdorff;
  std::vector<Ordinal> idx;
  for (Ordinal a = 0; a < s.domain_size(); ++a) {
    idx.push_back(a);
    std::vector<Ordinal> L, R;
    for (Level k = 1; k <= s.K(); ++k) {
      const int x = xi_naive(s, a, k);
      if (x == 0) {
        L.push_back(2 * k);
        R.push_back(2 * k + 1);
      } else if (x == 1) {
        L.push_back(2 * k + 1);
        R.push_back(2 * k);
      } else if (x > 1) {
        throw std::logic_error("Ξ above 1 has no Hausdorff encoding");
      }
    }
    g.left.emplace_back(std::move(L));
    g.right.emplace_back(std::move(R));
    g.anchors.push_back(FinSet{a});
  }
  g.index = FinSet(std::move(idx));
  return g;
}

Ordinal bracket_naive(const Scheme& s, Ordinal a, Ordinal b) {
  if (a > b) std::swap(a, b);
  const Level l = rho_naive(s, a, b);
  for (Ordinal x : closure_naive(s, b, l - 1)) {
    if (x >= a) return x;
  }
  throw std::logic_error("empty bracket window");
}

}  // namespace schemelab::oracle
