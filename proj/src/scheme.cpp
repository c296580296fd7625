#include "schemelab/scheme.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "schemelab/error.hpp"

namespace schemelab {

Decomposition positional_decomposition(const TypeSequence& t, Level k, const FinSet& F) {
  if (k == 0 || k > t.K()) throw Error(Errc::OutOfDomain, "decomposition needs 1 <= k <= K");
  if (F.size() != t.m(k)) throw Error(Errc::NotAMember, "member size does not match m_k");
  const Natural r = t.r(k);
  const Natural block = t.m(k - 1) - r;
  Decomposition d;
  d.root = F.slice(0, r);
  for (Natural i = 0; i < t.n(k); ++i) {
    const Natural a = r + i * block;
    d.children.push_back(d.root.unite(F.slice(a, a + block)));
  }
  return d;
}

Scheme Scheme::build(const TypeSequence& t) {
  std::vector<std::vector<FinSet>> levels(t.K() + 1);
  levels[t.K()].push_back(FinSet::range(0, t.m(t.K())));
  for (Level k = t.K(); k >= 1; --k) {
    std::map<FinSet, bool> seen;
    for (const FinSet& F : levels[k]) {
      for (FinSet& child : positional_decomposition(t, k, F).children) {
        if (seen.emplace(child, true).second) levels[k - 1].push_back(std::move(child));
      }
    }
    std::sort(levels[k - 1].begin(), levels[k - 1].end());
  }
  return from_levels(t, std::move(levels));
}

Scheme Scheme::from_levels(const TypeSequence& t, std::vector<std::vector<FinSet>> levels) {
  if (levels.size() != t.K() + 1) throw Error(Errc::CellMismatch, "need one member list per level 0..K");
  if (t.K() >= kNoLevel) throw Error(Errc::OutOfDomain, "too many levels for the rho table");
  Scheme s;
  s.type_ = t;
  s.size_ = t.m(t.K());
  s.levels_ = std::move(levels);
  s.link_and_tabulate();
  return s;
}

void Scheme::link_and_tabulate() {
  const Level K = type_.K();
  const std::size_t N = size_;
  const std::size_t words = (N + 63) / 64;

  for (const auto& lvl : levels_) {
    for (const FinSet& F : lvl) {
      if (!F.empty() && F.max() >= N) throw Error(Errc::OutOfDomain, "member {" + F.str() + "} leaves the domain");
    }
  }

  index_.assign(K + 1, {});
  for (Level k = 0; k <= K; ++k) {
    for (std::size_t i = 0; i < levels_[k].size(); ++i) index_[k].emplace(levels_[k][i], i);
  }

  children_.assign(K + 1, {});
  parents_.assign(K + 1, {});
  for (Level k = 0; k <= K; ++k) {
    children_[k].assign(levels_[k].size(), {});
    parents_[k].assign(levels_[k].size(), {});
  }
  for (Level k = 1; k <= K; ++k) {
    for (std::size_t i = 0; i < levels_[k].size(); ++i) {
      const FinSet& F = levels_[k][i];
      if (F.size() != type_.m(k)) continue;
      for (const FinSet& child : positional_decomposition(type_, k, F).children) {
        auto it = index_[k - 1].find(child);
        if (it == index_[k - 1].end()) continue;
        children_[k][i].push_back(it->second);
        parents_[k - 1][it->second].push_back(i);
      }
    }
  }

  // Members containing each ordinal, obtained by walking parent links upward
  // from the level-0 members.
  std::vector<std::vector<std::size_t>> containing(N);
  for (std::size_t i = 0; i < levels_[0].size(); ++i) {
    for (Ordinal x : levels_[0][i]) containing[x].push_back(i);
  }

  first_member_.assign(K + 1, std::vector<std::size_t>(N, kNone));
  norm_.assign(K + 1, std::vector<Natural>(N, 0));
  xi_.assign(K + 1, std::vector<int>(N, 0));
  rho_.assign(N * N, kNoLevel);

  std::vector<std::uint64_t> reach(words);
  std::vector<std::vector<std::uint64_t>> member_bits;
  for (Level k = 0; k <= K; ++k) {
    member_bits.assign(levels_[k].size(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < levels_[k].size(); ++i) {
      for (Ordinal x : levels_[k][i]) member_bits[i][x / 64] |= std::uint64_t{1} << (x % 64);
    }
    for (Ordinal a = 0; a < N; ++a) {
      auto& ids = containing[a];
      if (ids.empty()) continue;
      first_member_[k][a] = ids.front();
      const FinSet& F = levels_[k][ids.front()];
      const auto pos = static_cast<Natural>(F.index_of(a));
      norm_[k][a] = pos;
      if (k >= 1 && F.size() == type_.m(k)) {
        const Natural r = type_.r(k);
        xi_[k][a] = pos < r ? -1 : static_cast<int>((pos - r) / (type_.m(k - 1) - r));
      }

      std::fill(reach.begin(), reach.end(), 0);
      for (std::size_t id : ids) {
        for (std::size_t w = 0; w < words; ++w) reach[w] |= member_bits[id][w];
      }
      std::uint8_t* row = &rho_[a * N];
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = reach[w];
        while (bits) {
          const std::size_t b = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
          bits &= bits - 1;
          if (row[b] == kNoLevel) row[b] = static_cast<std::uint8_t>(k);
        }
      }
    }
    if (k == K) break;
    for (Ordinal a = 0; a < N; ++a) {
      std::vector<std::size_t> up;
      for (std::size_t id : containing[a]) {
        const auto& ps = parents_[k][id];
        up.insert(up.end(), ps.begin(), ps.end());
      }
      std::sort(up.begin(), up.end());
      up.erase(std::unique(up.begin(), up.end()), up.end());
      containing[a] = std::move(up);
    }
  }
}

std::ptrdiff_t Scheme::member_index(Level k, const FinSet& F) const {
  check_level(k);
  auto it = index_[k].find(F);
  return it == index_[k].end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

int Scheme::level_of_size(std::size_t size) const noexcept {
  for (Level k = 0; k <= K(); ++k) {
    if (type_.m(k) == size) return static_cast<int>(k);
  }
  return -1;
}

void Scheme::check_ordinal(Ordinal a) const {
  if (a >= size_) {
    throw Error(Errc::OutOfDomain, std::to_string(a) + " is outside {0.." + std::to_string(size_) + ")");
  }
}

void Scheme::check_level(Level k) const {
  if (k > K()) throw Error(Errc::OutOfDomain, "level " + std::to_string(k) + " above K");
}

Level Scheme::rho(Ordinal a, Ordinal b) const {
  check_ordinal(a);
  check_ordinal(b);
  const std::uint8_t v = rho_[static_cast<std::size_t>(a) * size_ + b];
  return v == kNoLevel ? kTop : v;
}

Level Scheme::rho_set(const FinSet& A) const {
  if (A.empty()) throw Error(Errc::OutOfDomain, "rho of the empty set");
  Level best = 0;
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = i + 1; j < A.size(); ++j) best = std::max(best, rho(A(i), A(j)));
  }
  if (A.size() == 1) check_ordinal(A(0));
  return best;
}

FinSet Scheme::closure(Ordinal a, Level k) const {
  check_ordinal(a);
  check_level(k);
  std::vector<Ordinal> out;
  const std::uint8_t* row = &rho_[static_cast<std::size_t>(a) * size_];
  for (Ordinal x = 0; x <= a; ++x) {
    if (row[x] <= k) out.push_back(x);
  }
  return FinSet(std::move(out));
}

Natural Scheme::norm(Ordinal a, Level k) const {
  check_ordinal(a);
  check_level(k);
  return norm_[k][a];
}

Level Scheme::delta(Ordinal a, Ordinal b) const {
  check_ordinal(a);
  check_ordinal(b);
  for (Level k = 0; k <= K(); ++k) {
    if (norm_[k][a] != norm_[k][b]) return k;
  }
  return kTop;
}

int Scheme::xi(Ordinal a, Level k) const {
  check_ordinal(a);
  check_level(k);
  return xi_[k][a];
}

const FinSet& Scheme::member_containing(Ordinal a, Level k) const {
  check_ordinal(a);
  check_level(k);
  const std::size_t id = first_member_[k][a];
  if (id == kNone) throw Error(Errc::NotAMember, "no level-" + std::to_string(k) + " member holds " + std::to_string(a));
  return levels_[k][id];
}

Decomposition canonical_decomposition(const Scheme& s, const FinSet& F) {
  const int k = s.level_of_size(F.size());
  if (k < 1 || s.member_index(static_cast<Level>(k), F) < 0) {
    throw Error(Errc::NotAMember, "{" + F.str() + "} is not a member of any level >= 1");
  }
  return positional_decomposition(s.type(), static_cast<Level>(k), F);
}

namespace {

// E ∩ F ⊑ E and E ∩ F ⊑ F.
bool intersection_is_initial(const FinSet& E, const FinSet& F) {
  const FinSet common = E.intersect(F);
  return common.initial_segment_of(E) && common.initial_segment_of(F);
}

}  // namespace

std::vector<AxiomViolation> verify_axioms(const Scheme& s) {
  std::vector<AxiomViolation> out;
  const TypeSequence& t = s.type();
  const Level K = s.K();

  for (Level k = 0; k <= K; ++k) {
    for (const FinSet& F : s.level(k)) {
      if (F.size() != t.m(k)) {
        out.push_back({"card", k, "{" + F.str() + "} has size " + std::to_string(F.size()) + ", expected " +
                                      std::to_string(t.m(k))});
      }
    }
  }
  if (s.level(K).size() != 1 || s.level(K).front() != s.domain()) {
    out.push_back({"top", K, "the whole domain must be the unique top-level member"});
  }

  for (Level k = 0; k <= K; ++k) {
    const auto& lvl = s.level(k);
    for (std::size_t i = 0; i < lvl.size(); ++i) {
      for (std::size_t j = i + 1; j < lvl.size(); ++j) {
        if (!intersection_is_initial(lvl[i], lvl[j])) {
          out.push_back({"i", k, "{" + lvl[i].str() + "} ∩ {" + lvl[j].str() + "} is not an initial segment of both"});
        }
      }
    }
  }

  for (Level k = 1; k <= K; ++k) {
    for (const FinSet& F : s.level(k)) {
      if (F.size() != t.m(k)) continue;
      const Decomposition d = positional_decomposition(t, k, F);
      std::ostringstream where;
      where << "member {" << F.str() << "}: ";
      if (d.root.size() != t.r(k) || d.children.size() != t.n(k)) {
        out.push_back({"ii", k, where.str() + "wrong root size or fan-out"});
      }
      FinSet all;
      for (std::size_t i = 0; i < d.children.size(); ++i) {
        const FinSet& c = d.children[i];
        all = all.unite(c);
        if (s.member_index(k - 1, c) < 0) {
          out.push_back({"ii", k, where.str() + "child {" + c.str() + "} is not a level-" + std::to_string(k - 1) +
                                      " member"});
        }
        const FinSet tail = c.minus(d.root);
        if (!precedes(d.root, tail)) out.push_back({"ii", k, where.str() + "root not below tail " + std::to_string(i)});
        for (std::size_t j = i + 1; j < d.children.size(); ++j) {
          if (c.intersect(d.children[j]) != d.root) {
            out.push_back({"ii", k, where.str() + "children do not form a Δ-system on the root"});
          }
          if (!precedes(tail, d.children[j].minus(d.root))) {
            out.push_back({"ii", k, where.str() + "tails out of order"});
          }
        }
      }
      if (all != F) out.push_back({"ii", k, where.str() + "children do not cover the member"});
    }
  }
  return out;
}

}  // namespace schemelab
