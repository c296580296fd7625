#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "schemelab/finset.hpp"
#include "schemelab/typeseq.hpp"

namespace schemelab {

// Value of Δ for equal arguments; compares above every level.
inline constexpr Level kTop = std::numeric_limits<Level>::max();

struct Decomposition {
  FinSet root;
  std::vector<FinSet> children;
};

struct AxiomViolation {
  std::string axiom;  // "card", "top", "i", "ii"
  Level level = 0;
  std::string detail;
};

// Positional split of a level-k member (k >= 1) into its n_k children:
// child i = F[0, r_k) ∪ F[a_i, a_i + m_{k-1} - r_k) with a_i = r_k + i (m_{k-1} - r_k).
Decomposition positional_decomposition(const TypeSequence& t, Level k, const FinSet& F);

// Finite construction scheme over {0, ..., m_K - 1}. All canonical functions are
// tabulated at construction, so every query is a const lookup and the object is
// safe to share between threads.
class Scheme {
 public:
  // The canonical scheme: the whole domain is the only level-K member and every
  // lower level is the set of descendants under positional decomposition.
  static Scheme build(const TypeSequence& t);

  // Takes levels as given, e.g. deliberately corrupted fixtures. Tables are
  // computed best-effort; verify_axioms reports what is wrong.
  static Scheme from_levels(const TypeSequence& t, std::vector<std::vector<FinSet>> levels);

  const TypeSequence& type() const noexcept { return type_; }
  Level K() const noexcept { return type_.K(); }
  Ordinal domain_size() const noexcept { return size_; }
  FinSet domain() const { return FinSet::range(0, size_); }

  const std::vector<std::vector<FinSet>>& levels() const noexcept { return levels_; }
  const std::vector<FinSet>& level(Level k) const { return levels_.at(k); }
  // Index of F inside level k, or -1.
  std::ptrdiff_t member_index(Level k, const FinSet& F) const;
  // Level whose member size equals |F|, or -1 when no level has that size.
  int level_of_size(std::size_t size) const noexcept;

  // Ids (in level k-1) of the positional children of member idx of level k.
  const std::vector<std::size_t>& children_of(Level k, std::size_t idx) const { return children_.at(k).at(idx); }
  // Ids (in level k+1) of members having member idx of level k as a child.
  const std::vector<std::size_t>& parents_of(Level k, std::size_t idx) const { return parents_.at(k).at(idx); }

  // Least level at which some member contains both ordinals.
  Level rho(Ordinal a, Ordinal b) const;
  // max rho over pairs of A; 0 for singletons.
  Level rho_set(const FinSet& A) const;
  // (α)_k = {ξ <= α : rho(α, ξ) <= k}.
  FinSet closure(Ordinal a, Level k) const;
  // ||α||_k = |(α)_k| - 1, the position of α in any level-k member containing it.
  Natural norm(Ordinal a, Level k) const;
  // Least k <= K where the norms differ, kTop when a == b.
  Level delta(Ordinal a, Ordinal b) const;
  // -1 when α is in the root of its level-k member, else the index of the child
  // whose tail holds α. xi(α, 0) = 0.
  int xi(Ordinal a, Level k) const;

  // Some level-k member containing α.
  const FinSet& member_containing(Ordinal a, Level k) const;

 private:
  Scheme() = default;
  void link_and_tabulate();
  void check_ordinal(Ordinal a) const;
  void check_level(Level k) const;

  TypeSequence type_;
  Ordinal size_ = 0;
  std::vector<std::vector<FinSet>> levels_;
  std::vector<std::map<FinSet, std::size_t>> index_;
  std::vector<std::vector<std::vector<std::size_t>>> children_;
  std::vector<std::vector<std::vector<std::size_t>>> parents_;

  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  static constexpr std::uint8_t kNoLevel = 0xff;
  std::vector<std::vector<std::size_t>> first_member_;  // [k][α]
  std::vector<std::uint8_t> rho_;                         // [α * size + β]
  std::vector<std::vector<Natural>> norm_;                // [k][α]
  std::vector<std::vector<int>> xi_;                      // [k][α]
};

// Root and children of F, which must be a member of some level k + 1 >= 1.
Decomposition canonical_decomposition(const Scheme& s, const FinSet& F);

// Exhaustive check of member sizes, uniqueness of the top member and axioms (i)/(ii).
std::vector<AxiomViolation> verify_axioms(const Scheme& s);

}  // namespace schemelab
