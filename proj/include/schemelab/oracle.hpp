#pragma once

#include <set>
#include <vector>

#include "schemelab/finset.hpp"
#include "schemelab/gaps.hpp"
#include "schemelab/scheme.hpp"
#include "schemelab/typeseq.hpp"

// Slow recomputation of every canonical function straight from the
// definitions. Nothing here reads the scheme's tables or calls into the fast
// modules beyond the stored level lists and the type, so a bug in one side
// shows up as a disagreement.
namespace schemelab::oracle {

using Member = std::set<Ordinal>;

// Levels 0..K of the canonical scheme, expanded from the top member by dealing
// each member's non-root elements into consecutive blocks.
std::vector<std::set<Member>> levels_naive(const TypeSequence& t);

// Least level whose stored members include one holding both ordinals; kTop if none.
Level rho_naive(const Scheme& s, Ordinal a, Ordinal b);
FinSet closure_naive(const Scheme& s, Ordinal a, Level k);
// |(α)_k| - 1.
Natural norm_naive(const Scheme& s, Ordinal a, Level k);
// First position where the norm sequences differ, kTop if never.
Level delta_naive(const Scheme& s, Ordinal a, Ordinal b);
// Root flag or child index, read from every level-k member holding α. Throws
// std::logic_error if two containing members disagree.
int xi_naive(const Scheme& s, Ordinal a, Level k);

// Everything above for a whole scheme, tabulated once from rho_naive and
// xi_naive so exhaustive comparisons stay affordable.
struct NaiveTables {
  Ordinal size = 0;
  Level K = 0;
  std::vector<Level> rho;                 // [α * size + β]
  std::vector<std::vector<Natural>> norm;  // [k][α]
  std::vector<std::vector<int>> xi;        // [k][α]

  Level rho_at(Ordinal a, Ordinal b) const { return rho[static_cast<std::size_t>(a) * size + b]; }
  Level delta_at(Ordinal a, Ordinal b) const;
};
NaiveTables tabulate(const Scheme& s);

// Clause-by-clause captured-system test. Anything that is not a root-tail-tail
// Δ-system of equal-size sets with at least two members is not captured.
bool captured_naive(const Scheme& s, const std::vector<FinSet>& family, Level l);
bool captured_naive(const NaiveTables& t, const std::vector<FinSet>& family, Level l);

// L/R sets from a freshly computed Ξ table (2-schemes).
Pregap hausdorff_naive(const Scheme& s);

// min((β)_{ρ-1} \ α) by scanning closures.
Ordinal bracket_naive(const Scheme& s, Ordinal a, Ordinal b);

}  // namespace schemelab::oracle
