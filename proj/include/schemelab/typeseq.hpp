#pragma once

#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "schemelab/finset.hpp"

namespace schemelab {

using Level = unsigned;

// One step of a type: (m_k, n_{k+1}, r_{k+1}).
struct Triple {
  Natural m = 0;
  Natural n = 0;
  Natural r = 0;

  friend bool operator==(const Triple&, const Triple&) = default;
};

// Finite prefix of a type sequence, levels 0..K. Immutable once built.
class TypeSequence {
 public:
  const std::vector<Triple>& triples() const noexcept { return triples_; }

  Level K() const noexcept { return static_cast<Level>(triples_.size()); }
  // Member size at level k, 0 <= k <= K.
  Natural m(Level k) const;
  // Fan-out and root size of the step into level k, 1 <= k <= K.
  Natural n(Level k) const;
  Natural r(Level k) const;

  // Every fan-out equals 2.
  bool is_two_type() const noexcept;

  // "1,2,0;2,2,1"
  std::string str() const;

  friend bool operator==(const TypeSequence&, const TypeSequence&) = default;

 private:
  friend TypeSequence make_type_prefix(const std::vector<Triple>& triples);

  std::vector<Triple> triples_;
  std::vector<Natural> sizes_;  // m_0..m_K
};

// Validates conditions (a)-(d) level by level and throws Error with the code
// of the first violated condition.
TypeSequence make_type_prefix(const std::vector<Triple>& triples);

// Parses "1,2,0;2,2,1" (whitespace tolerant).
std::vector<Triple> parse_triples(const std::string& text);

// Occurrence count of each root size r among r_1..r_K. Goodness itself is a
// statement about infinite sequences, so only counts are reported.
std::map<Natural, std::size_t> goodness_report(const TypeSequence& t);

struct LevelPartition {
  std::vector<std::vector<Level>> cells;
};

// (cell index, r) -> #{k in cell : k >= 1, r_k = r}. Throws CellMismatch unless
// the cells are disjoint and cover exactly 0..K.
std::map<std::pair<std::size_t, Natural>, std::size_t> partition_compatible_report(
    const LevelPartition& p, const TypeSequence& t);

struct PrefixBounds {
  Level K = 3;
  Natural max_n = 3;
  // Root sizes are drawn from [0, min(max_r, m_k - 1)].
  Natural max_r = 8;
  // Retry until m_K stays within this bound.
  Natural max_m = 512;
};

TypeSequence random_type_prefix(const PrefixBounds& bounds, std::mt19937_64& rng);

// All valid prefixes of exactly K triples with n_k <= max_n and m_K <= max_m,
// in lexicographic order of triples.
std::vector<TypeSequence> enumerate_type_prefixes(Level K, Natural max_n, Natural max_m);

}  // namespace schemelab
