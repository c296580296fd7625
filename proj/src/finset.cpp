#include "schemelab/finset.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "schemelab/error.hpp"

namespace schemelab {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyPrefix: return "EmptyPrefix";
    case Errc::ViolatesA: return "ViolatesA";
    case Errc::ViolatesB: return "ViolatesB";
    case Errc::ViolatesC: return "ViolatesC";
    case Errc::ViolatesD: return "ViolatesD";
    case Errc::CellMismatch: return "CellMismatch";
    case Errc::NotIncreasing: return "NotIncreasing";
    case Errc::NotAMember: return "NotAMember";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::NotDeltaSystem: return "NotDeltaSystem";
    case Errc::EqualArguments: return "EqualArguments";
    case Errc::NotTwoScheme: return "NotTwoScheme";
    case Errc::TooFewIndices: return "TooFewIndices";
    case Errc::NotNormal: return "NotNormal";
    case Errc::InvalidSeparating: return "InvalidSeparating";
    case Errc::OutOfUniverse: return "OutOfUniverse";
    case Errc::IncompleteFilter: return "IncompleteFilter";
    case Errc::WrongPosetKind: return "WrongPosetKind";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

FinSet::FinSet(std::initializer_list<Ordinal> elems) : FinSet(std::vector<Ordinal>(elems)) {}

FinSet::FinSet(std::vector<Ordinal> elems) : elems_(std::move(elems)) {
  for (std::size_t i = 1; i < elems_.size(); ++i) {
    if (elems_[i - 1] >= elems_[i]) {
      throw Error(Errc::NotIncreasing, "FinSet elements must be strictly increasing");
    }
  }
}

FinSet FinSet::from_unsorted(std::vector<Ordinal> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return FinSet(std::move(elems));
}

FinSet FinSet::range(Ordinal lo, Ordinal hi) {
  std::vector<Ordinal> v;
  for (Ordinal x = lo; x < hi; ++x) v.push_back(x);
  return FinSet(std::move(v));
}

FinSet FinSet::image(const FinSet& positions) const {
  std::vector<Ordinal> out;
  out.reserve(positions.size());
  for (Ordinal p : positions) out.push_back(elems_.at(p));
  return FinSet(std::move(out));
}

FinSet FinSet::slice(std::size_t from, std::size_t to) const {
  to = std::min(to, elems_.size());
  if (from >= to) return {};
  return FinSet(std::vector<Ordinal>(elems_.begin() + static_cast<std::ptrdiff_t>(from),
                                     elems_.begin() + static_cast<std::ptrdiff_t>(to)));
}

bool FinSet::contains(Ordinal x) const noexcept {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::ptrdiff_t FinSet::index_of(Ordinal x) const noexcept {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  if (it == elems_.end() || *it != x) return -1;
  return it - elems_.begin();
}

bool FinSet::subset_of(const FinSet& other) const noexcept {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

bool FinSet::initial_segment_of(const FinSet& other) const noexcept {
  return elems_.size() <= other.elems_.size() &&
         std::equal(elems_.begin(), elems_.end(), other.elems_.begin());
}

FinSet FinSet::intersect(const FinSet& other) const {
  FinSet out;
  std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                        std::back_inserter(out.elems_));
  return out;
}

FinSet FinSet::unite(const FinSet& other) const {
  FinSet out;
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                 std::back_inserter(out.elems_));
  return out;
}

FinSet FinSet::minus(const FinSet& other) const {
  FinSet out;
  std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                      std::back_inserter(out.elems_));
  return out;
}

FinSet FinSet::below(Ordinal bound) const {
  FinSet out;
  auto it = std::lower_bound(elems_.begin(), elems_.end(), bound);
  out.elems_.assign(elems_.begin(), it);
  return out;
}

bool FinSet::intersects(const FinSet& other) const noexcept {
  auto a = elems_.begin();
  auto b = other.elems_.begin();
  while (a != elems_.end() && b != other.elems_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

std::string FinSet::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) os << ' ';
    os << elems_[i];
  }
  return os.str();
}

bool precedes(const FinSet& x, const FinSet& y) noexcept {
  if (x.empty()) return true;
  if (y.empty()) return false;
  return x.max() < y.min();
}

std::string to_string(const std::vector<FinSet>& family) {
  std::string out = "[";
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i) out += ", ";
    out += "{" + family[i].str() + "}";
  }
  return out + "]";
}

}  // namespace schemelab
