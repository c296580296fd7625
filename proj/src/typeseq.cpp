#include "schemelab/typeseq.hpp"

#include <algorithm>
#include <sstream>

#include "schemelab/error.hpp"

namespace schemelab {

Natural TypeSequence::m(Level k) const {
  if (k > K()) throw Error(Errc::OutOfDomain, "level " + std::to_string(k) + " above K");
  return sizes_[k];
}

Natural TypeSequence::n(Level k) const {
  if (k == 0 || k > K()) throw Error(Errc::OutOfDomain, "n_k defined for 1 <= k <= K");
  return triples_[k - 1].n;
}

Natural TypeSequence::r(Level k) const {
  if (k == 0 || k > K()) throw Error(Errc::OutOfDomain, "r_k defined for 1 <= k <= K");
  return triples_[k - 1].r;
}

bool TypeSequence::is_two_type() const noexcept {
  return std::all_of(triples_.begin(), triples_.end(), [](const Triple& t) { return t.n == 2; });
}

std::string TypeSequence::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < triples_.size(); ++i) {
    if (i) os << ';';
    os << triples_[i].m << ',' << triples_[i].n << ',' << triples_[i].r;
  }
  return os.str();
}

TypeSequence make_type_prefix(const std::vector<Triple>& triples) {
  if (triples.empty()) throw Error(Errc::EmptyPrefix, "a type prefix needs at least one triple");
  auto at = [](std::size_t k) { return " at level " + std::to_string(k); };
  if (triples[0].m != 1) throw Error(Errc::ViolatesA, "m_0 must be 1" + at(0));

  TypeSequence t;
  t.sizes_.push_back(1);
  for (std::size_t k = 0; k < triples.size(); ++k) {
    const Triple& tr = triples[k];
    if (tr.n < 2) throw Error(Errc::ViolatesB, "n_{k+1} must be >= 2" + at(k));
    if (tr.r >= tr.m) throw Error(Errc::ViolatesC, "r_{k+1} must be < m_k" + at(k));
    Natural next = tr.r + (tr.m - tr.r) * tr.n;
    if (k + 1 < triples.size() && triples[k + 1].m != next) {
      throw Error(Errc::ViolatesD, "m_{k+1} = " + std::to_string(triples[k + 1].m) + " but recursion gives " +
                                       std::to_string(next) + at(k));
    }
    t.sizes_.push_back(next);
  }
  t.triples_ = triples;
  return t;
}

std::vector<Triple> parse_triples(const std::string& text) {
  std::vector<Triple> out;
  std::stringstream all(text);
  std::string chunk;
  while (std::getline(all, chunk, ';')) {
    if (chunk.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::replace(chunk.begin(), chunk.end(), ',', ' ');
    std::istringstream is(chunk);
    long long m = -1, n = -1, r = -1;
    std::string rest;
    if (!(is >> m >> n >> r) || (is >> rest) || m < 0 || n < 0 || r < 0) {
      throw Error(Errc::ParseError, "expected 'm,n,r' triple, got '" + chunk + "'");
    }
    out.push_back({static_cast<Natural>(m), static_cast<Natural>(n), static_cast<Natural>(r)});
  }
  return out;
}

std::map<Natural, std::size_t> goodness_report(const TypeSequence& t) {
  std::map<Natural, std::size_t> counts;
  for (Level k = 1; k <= t.K(); ++k) ++counts[t.r(k)];
  return counts;
}

std::map<std::pair<std::size_t, Natural>, std::size_t> partition_compatible_report(
    const LevelPartition& p, const TypeSequence& t) {
  std::vector<int> owner(t.K() + 1, -1);
  for (std::size_t c = 0; c < p.cells.size(); ++c) {
    for (Level k : p.cells[c]) {
      if (k > t.K()) throw Error(Errc::CellMismatch, "cell mentions level " + std::to_string(k) + " above K");
      if (owner[k] != -1) throw Error(Errc::CellMismatch, "level " + std::to_string(k) + " in two cells");
      owner[k] = static_cast<int>(c);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) {
    throw Error(Errc::CellMismatch, "partition does not cover 0..K");
  }
  std::map<std::pair<std::size_t, Natural>, std::size_t> counts;
  for (Level k = 1; k <= t.K(); ++k) ++counts[{static_cast<std::size_t>(owner[k]), t.r(k)}];
  return counts;
}

TypeSequence random_type_prefix(const PrefixBounds& bounds, std::mt19937_64& rng) {
  for (;;) {
    std::vector<Triple> triples;
    Natural m = 1;
    bool ok = true;
    for (Level k = 0; k < bounds.K; ++k) {
      Natural n = 2 + static_cast<Natural>(rng() % (std::max<Natural>(bounds.max_n, 2) - 1));
      Natural r_cap = std::min<Natural>(bounds.max_r, m - 1);
      Natural r = static_cast<Natural>(rng() % (r_cap + 1));
      triples.push_back({m, n, r});
      m = r + (m - r) * n;
      if (m > bounds.max_m) {
        ok = false;
        break;
      }
    }
    if (ok) return make_type_prefix(triples);
  }
}

namespace {

void extend(std::vector<Triple>& prefix, Natural m, Level K, Natural max_n, Natural max_m,
            std::vector<TypeSequence>& out) {
  if (prefix.size() == K) {
    out.push_back(make_type_prefix(prefix));
    return;
  }
  for (Natural n = 2; n <= max_n; ++n) {
    for (Natural r = 0; r < m; ++r) {
      Natural next = r + (m - r) * n;
      if (next > max_m) continue;
      prefix.push_back({m, n, r});
      extend(prefix, next, K, max_n, max_m, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<TypeSequence> enumerate_type_prefixes(Level K, Natural max_n, Natural max_m) {
  std::vector<TypeSequence> out;
  std::vector<Triple> prefix;
  if (K > 0) extend(prefix, 1, K, max_n, max_m, out);
  return out;
}

}  // namespace schemelab
