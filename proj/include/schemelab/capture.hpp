#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "schemelab/finset.hpp"
#include "schemelab/scheme.hpp"

namespace schemelab {

struct DeltaSystemWitness {
  FinSet root;
  std::vector<FinSet> members;
};

struct CaptureCertificate {
  Level level = 0;
  std::vector<FinSet> members;
  FinSet root;

  friend bool operator==(const CaptureCertificate&, const CaptureCertificate&) = default;
};

// Common pairwise intersection of a family of at least two sets, if all pairs agree.
std::optional<FinSet> delta_system_root(const std::vector<FinSet>& family);

// Δ-system whose root lies below every tail and whose tails increase in list order.
bool is_root_tail_tail(const std::vector<FinSet>& family);

// Certificate when the family is captured at level l. Families are read in the
// given order: member i must sit in child i of the level-l member. Throws
// NotDeltaSystem unless the family is a root-tail-tail Δ-system of equal-size
// sets (so at least two members). Level 0 never captures.
std::optional<CaptureCertificate> capture_certificate(const Scheme& s, const std::vector<FinSet>& family, Level l);
bool is_captured(const Scheme& s, const std::vector<FinSet>& family, Level l);
bool is_fully_captured(const Scheme& s, const std::vector<FinSet>& family, Level l);

// is_captured({{a}, {b}}, l) for a < b without building the family.
bool is_captured_pair(const Scheme& s, Ordinal a, Ordinal b, Level l);

// {{α} : α ∈ D} in increasing order.
std::vector<FinSet> singletons(const FinSet& D);

struct CaptureSearchOptions {
  // Exhaustive enumeration while C(|S|, n) stays within cap; seeded sampling of
  // cap tuples beyond it.
  std::uint64_t cap = 1'000'000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct CaptureSearchResult {
  std::vector<CaptureCertificate> certificates;  // sorted by (level, tuple)
  bool sampled = false;
  std::uint64_t seed = 0;
  std::uint64_t examined = 0;
  // FNV-1a over the examined tuples in order; tells sampling runs apart.
  std::uint64_t digest = 0;
};

// n-subsets D of S whose singleton family is captured at some level in `levels`
// (all levels 1..K when empty).
CaptureSearchResult find_captured_tuples(const Scheme& s, const FinSet& S, std::size_t n,
                                         const std::set<Level>& levels, const CaptureSearchOptions& opts = {});

// π_n(S): levels carrying a captured n-subset of S. Always exhaustive.
std::set<Level> project(const Scheme& s, const FinSet& S, std::size_t n);

// ⟦α, β⟧ = min((β)_{ρ(α,β)-1} \ α). Arguments may come in either order.
Ordinal sq_bracket(const Scheme& s, Ordinal a, Ordinal b);
// Same value read off the level-ρ member: min(F_{Ξ_β(l)} \ R(F)).
Ordinal sq_bracket_from_decomposition(const Scheme& s, Ordinal a, Ordinal b);
// ⦅S⦆: brackets of captured pairs from S.
std::set<Ordinal> sq_bracket_set(const Scheme& s, const FinSet& S);

// H_n(α) = {ξ < α : ∀ m in (n, K], Ξ_α(m) = -1 or Ξ_ξ(m) <= Ξ_α(m)}.
FinSet h_ideal_generator(const Scheme& s, Ordinal a, Level n);

}  // namespace schemelab
