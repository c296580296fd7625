#pragma once

#include <set>
#include <string>
#include <vector>

#include "schemelab/finset.hpp"
#include "schemelab/scheme.hpp"

namespace schemelab {

enum class Provenance { Raw, Hausdorff, TodorcevicRestricted, LevelwiseDifference };

std::string provenance_name(Provenance p);

// Indexed family of pairs (L_i, R_i) of finite sets of naturals. Entries are
// addressed by position i in `index`; anchors[i] lists the scheme ordinals the
// entry was computed from ({α} for a raw gap, {S(i), S(i+1)} for a levelwise
// difference).
struct Pregap {
  FinSet index;
  std::vector<FinSet> left;
  std::vector<FinSet> right;
  std::vector<FinSet> anchors;
  Provenance provenance = Provenance::Raw;

  std::size_t size() const noexcept { return index.size(); }
  // L_i ∩ R_i = ∅ for every i.
  bool is_normal() const;
};

// Threshold per side and position: s(L_i) = left[i], s(R_i) = right[i].
struct SeparatingFunction {
  std::vector<Natural> left;
  std::vector<Natural> right;
};

struct GapViolation {
  std::string check;
  Ordinal alpha = 0;
  Ordinal beta = 0;
  std::string detail;
};

// L_α = {2k + Ξ_α(k) : 1 <= k <= K, Ξ_α(k) >= 0}, R_α = {2k + 1 - Ξ_α(k) : ...}.
// Defined for 2-schemes only (every n_k = 2); throws NotTwoScheme otherwise.
Pregap hausdorff_gap(const Scheme& s);

// N_k = {0, ..., 2k+1}.
FinSet n_window(Level k);

// Points (0)-(3) of the interaction bounds, over all index pairs α < β.
std::vector<GapViolation> check_interhausdorff(const Scheme& s, const Pregap& g);

// {α < β : L_β ∩ R_α ⊆ k} ⊆ (β)_k for every β and k <= K.
std::vector<GapViolation> check_hausdorff_condition(const Scheme& s, const Pregap& g);

// D_i = L_{X(i+1)} \ L_{X(i)}, E_i = R_{X(i+1)} \ R_{X(i)}, where X holds
// positions into g.index. The result is indexed by 0..|X|-2.
Pregap levelwise_diff(const Pregap& g, const FinSet& positions);

// For consecutive ordinals α, α+1 of the index: the successor differences
// outside N_{ρ(α,α+1)} are even on the left and odd on the right.
std::vector<GapViolation> check_levelwise_even_odd(const Scheme& s, const Pregap& g);

// Restriction to C = ∪{{2k, 2k+1} : k ∈ P0, k >= 1}.
Pregap todorcevic_restrict(const Scheme& s, const Pregap& g, const std::set<Level>& p0);

// For captured pairs α < β at level l: l ∈ P0 gives L_α ∩ R_β = {2l};
// l ∈ P1 gives L_α ⊆ L_β and R_α ⊆ R_β.
std::vector<GapViolation> check_todorcevic_capture_laws(const Scheme& s, const Pregap& restricted,
                                                        const std::set<Level>& p0, const std::set<Level>& p1);

// Tower direction and the gap law under capture, for every α < β.
std::vector<GapViolation> check_tower_and_capture(const Scheme& s, const Pregap& g);

// (L_i ∩ R_j) ∪ (L_j ∩ R_i) ≠ ∅ for all i ≠ j. Throws NotNormal.
bool is_biorthogonal(const Pregap& g);

// L_i ∩ R_j ⊆ max(s(L_i), s(R_j)) for all i, j.
bool validate_separating(const Pregap& g, const SeparatingFunction& s);

// C = ∪ L_i \ (s(L_i) + 1). Throws InvalidSeparating if s is not separating.
FinSet set_from_separating(const Pregap& g, const SeparatingFunction& s);

}  // namespace schemelab
