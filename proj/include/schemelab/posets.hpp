#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "schemelab/capture.hpp"
#include "schemelab/finset.hpp"
#include "schemelab/gaps.hpp"
#include "schemelab/scheme.hpp"

namespace schemelab {

enum class PosetKind { SEP, CHI0, CHI1, DN, BIORTH };

std::string poset_kind_name(PosetKind k);
// Accepts the names printed by poset_kind_name, case-insensitively. Throws ParseError.
PosetKind parse_poset_kind(const std::string& name);

// SEP conditions are finite partial maps index -> natural; the other kinds use
// finite sets of indices.
using SepCondition = std::map<Ordinal, Natural>;
using Condition = std::variant<SepCondition, FinSet>;

// Domain of a SEP condition, or the set itself.
FinSet condition_support(const Condition& c);
std::string condition_str(const Condition& c);

class PosetView {
 public:
  // SEP, CHI0, CHI1 and BIORTH over a pregap; the universe is its index.
  static PosetView over_pregap(PosetKind kind, Pregap g);
  // D_n(F, A): finite sets with no n-subset captured at a level in A.
  static PosetView dn(std::shared_ptr<const Scheme> s, std::size_t n, std::set<Level> A);

  PosetKind kind() const noexcept { return kind_; }
  const FinSet& universe() const noexcept { return universe_; }
  const Pregap& pregap() const;
  const Scheme& scheme() const;
  std::size_t n() const noexcept { return n_; }
  const std::set<Level>& levels() const noexcept { return A_; }

  // The empty condition of the right shape.
  Condition empty_condition() const;

 private:
  PosetKind kind_ = PosetKind::SEP;
  std::shared_ptr<const Pregap> pregap_;
  std::shared_ptr<const Scheme> scheme_;
  std::size_t n_ = 2;
  std::set<Level> A_;
  FinSet universe_;
};

// Exact clause of the view's kind. Throws OutOfUniverse for indices outside
// the universe and WrongPosetKind for a condition of the wrong shape.
bool is_condition(const PosetView& v, const Condition& c);

// Union of the two conditions is a condition (SEP maps must also agree on
// shared indices).
bool compatible(const PosetView& v, const Condition& p, const Condition& q);

// p ∪ q as a condition of the same shape; nullopt if SEP maps disagree.
std::optional<Condition> condition_union(const Condition& p, const Condition& q);

// M_β = {p : β ∈ dom(p)}.
struct DenseTarget {
  Ordinal beta = 0;
  bool met_by(const Condition& c) const;
};

std::vector<DenseTarget> dense_meet_targets(const PosetView& v, const FinSet& betas);

struct FilterOptions {
  // SEP values are searched in [0, bound); the bound doubles up to max_bound.
  Natural initial_bound = 4;
  Natural max_bound = 1u << 12;
};

struct FilterResult {
  // Descending chain seed >= c_1 >= ...; pairwise compatible by construction.
  std::vector<Condition> chain;
  bool complete = true;
  std::optional<Ordinal> failed_target;
  std::string failure;

  const Condition& last() const { return chain.back(); }
};

// Meets the targets in order, each time by the smallest extension that stays a
// condition. Failure is reported in the result.
FilterResult greedy_filter(const PosetView& v, const std::vector<DenseTarget>& targets, const Condition& seed,
                           const FilterOptions& opts = {});

// s(D_α) = s(E_α) = the filter's value at α. Throws IncompleteFilter when some
// index of the pregap is missing, WrongPosetKind for non-SEP views.
SeparatingFunction extract_separating(const PosetView& v, const FilterResult& f);

struct CaptureLawReport {
  std::size_t examined = 0;
  std::size_t applicable = 0;
  std::vector<std::string> counterexamples;

  bool ok() const noexcept { return counterexamples.empty(); }
};

// SEP over a difference pregap of the scheme's Hausdorff gap. For each pair
// (p, q) the law is asserted when: |p| = |q|; values agree along the increasing
// bijection of domains; the domains form a root-tail-tail Δ-system whose root
// R has max(R) + 1 < min(dom \ R) and max(dom p) + 1 ∉ dom q (and symmetrically);
// and the blocks Z_p, Z_q (anchors of the domains) are captured at a level
// l > max(values) + 1. The law: p ∪ q is a condition. p = q is asserted outright.
CaptureLawReport check_sep_capture_law(const PosetView& v, const Scheme& s,
                                       const std::vector<std::pair<SepCondition, SepCondition>>& pairs);

// D_n quads (p_δ, p_δ+1, p_γ, p_γ+1): when all four are conditions forming a
// root-tail-tail Δ-system of equal-size sets in that order and the blocks
// p_δ ∪ p_δ+1, p_γ ∪ p_γ+1 are captured at some level, p_δ ∪ p_γ+1 must be a condition.
struct DnQuad {
  FinSet p_delta, p_delta1, p_gamma, p_gamma1;
};
CaptureLawReport check_dn_capture_law(const PosetView& v, const std::vector<DnQuad>& quads);

struct AntichainOptions {
  std::size_t max_size = 3;     // largest support of a candidate condition
  Natural max_value = 2;        // SEP values range over [0, max_value]
  std::uint64_t budget = 1'000'000;  // branch-and-bound steps
};

struct AntichainResult {
  std::vector<Condition> antichain;
  bool budget_exceeded = false;
  std::uint64_t steps = 0;
  std::size_t candidates = 0;
};

// Largest pairwise incompatible family among the non-empty conditions of
// bounded support inside `universe`. Exact unless budget_exceeded is set.
AntichainResult exhaustive_antichain(const PosetView& v, const FinSet& universe, const AntichainOptions& opts = {});

// Largest uniform root-tail-tail Δ-subfamily (at least two members), ties
// broken by the lexicographically least member list.
std::optional<DeltaSystemWitness> delta_system_refine(const std::vector<FinSet>& family);

}  // namespace schemelab
