#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace schemelab {

using Ordinal = std::uint32_t;
using Natural = std::uint32_t;

// A strictly increasing finite sequence of ordinals. Positional access follows
// the increasing enumeration: set(i) is the i-th element, set.image(A) = {set(a) : a in A}.
class FinSet {
 public:
  FinSet() = default;
  FinSet(std::initializer_list<Ordinal> elems);
  explicit FinSet(std::vector<Ordinal> elems);

  // Sorts and deduplicates instead of rejecting.
  static FinSet from_unsorted(std::vector<Ordinal> elems);
  // {lo, ..., hi-1}
  static FinSet range(Ordinal lo, Ordinal hi);

  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  Ordinal operator()(std::size_t i) const { return elems_.at(i); }
  Ordinal min() const { return elems_.front(); }
  Ordinal max() const { return elems_.back(); }

  FinSet image(const FinSet& positions) const;
  // Elements at positions [from, to).
  FinSet slice(std::size_t from, std::size_t to) const;

  bool contains(Ordinal x) const noexcept;
  // Position of x in the increasing enumeration, or -1.
  std::ptrdiff_t index_of(Ordinal x) const noexcept;

  bool subset_of(const FinSet& other) const noexcept;
  // this ⊑ other: this is an initial segment of other.
  bool initial_segment_of(const FinSet& other) const noexcept;

  FinSet intersect(const FinSet& other) const;
  FinSet unite(const FinSet& other) const;
  FinSet minus(const FinSet& other) const;
  // Elements strictly below bound.
  FinSet below(Ordinal bound) const;
  bool intersects(const FinSet& other) const noexcept;
  // Every element < bound.
  bool bounded_by(Ordinal bound) const noexcept { return empty() || max() < bound; }

  std::span<const Ordinal> elements() const noexcept { return elems_; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  // Space separated, e.g. "0 2 5"; empty set renders as "".
  std::string str() const;

  friend auto operator<=>(const FinSet&, const FinSet&) = default;
  friend bool operator==(const FinSet&, const FinSet&) = default;

 private:
  std::vector<Ordinal> elems_;
};

// X < Y in the sense max(X) < min(Y), or X empty.
bool precedes(const FinSet& x, const FinSet& y) noexcept;

std::string to_string(const std::vector<FinSet>& family);

}  // namespace schemelab
