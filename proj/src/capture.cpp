#include "schemelab/capture.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "schemelab/error.hpp"

namespace schemelab {

std::optional<FinSet> delta_system_root(const std::vector<FinSet>& family) {
  if (family.size() < 2) return std::nullopt;
  const FinSet root = family[0].intersect(family[1]);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (family[i] == family[j] || family[i].intersect(family[j]) != root) return std::nullopt;
    }
  }
  return root;
}

namespace {

bool tails_disjoint(const FinSet& a, const FinSet& b, std::size_t r) {
  std::size_t i = r, j = r;
  while (i < a.size() && j < b.size()) {
    if (a(i) == b(j)) return false;
    a(i) < b(j) ? ++i : ++j;
  }
  return true;
}

// Root size of a root-tail-tail Δ-system, without materialising any sets: the
// root is the common prefix of the first two members, every member must start
// with it, tails must be pairwise disjoint and consecutive tails increasing.
std::optional<std::size_t> rtt_root_size(const std::vector<FinSet>& family) {
  if (family.size() < 2) return std::nullopt;
  const FinSet& f0 = family[0];
  const FinSet& f1 = family[1];
  std::size_t r = 0;
  while (r < f0.size() && r < f1.size() && f0(r) == f1(r)) ++r;
  for (const FinSet& D : family) {
    if (D.size() < r) return std::nullopt;
    for (std::size_t a = 0; a < r; ++a) {
      if (D(a) != f0(a)) return std::nullopt;
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (family[i] == family[j] || !tails_disjoint(family[i], family[j], r)) return std::nullopt;
    }
    if (i + 1 < family.size()) {
      const FinSet& a = family[i];
      const FinSet& b = family[i + 1];
      if (a.size() > r && b.size() > r && a.max() >= b(r)) return std::nullopt;
    }
  }
  return r;
}

}  // namespace

bool is_root_tail_tail(const std::vector<FinSet>& family) { return rtt_root_size(family).has_value(); }

std::optional<CaptureCertificate> capture_certificate(const Scheme& s, const std::vector<FinSet>& family, Level l) {
  const auto rs = rtt_root_size(family);
  if (!rs) throw Error(Errc::NotDeltaSystem, to_string(family) + " is not a root-tail-tail Δ-system");
  const std::size_t m = family.front().size();
  for (const FinSet& D : family) {
    if (D.size() != m) throw Error(Errc::NotDeltaSystem, "members of " + to_string(family) + " differ in size");
    for (Ordinal x : D) s.rho(x, x);  // domain check
  }
  if (l == 0 || l > s.K()) return std::nullopt;

  const std::size_t r = *rs;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t a = 0; a < m; ++a) {
      const int expected = a < r ? -1 : static_cast<int>(i);
      if (s.xi(family[i](a), l) != expected) return std::nullopt;
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      for (std::size_t a = r; a < m; ++a) {
        const Ordinal x = family[i](a);
        const Ordinal y = family[j](a);
        if (s.rho(x, y) != l || s.delta(x, y) != l) return std::nullopt;
      }
    }
  }
  return CaptureCertificate{l, family, family.front().slice(0, r)};
}

bool is_captured(const Scheme& s, const std::vector<FinSet>& family, Level l) {
  return capture_certificate(s, family, l).has_value();
}

bool is_fully_captured(const Scheme& s, const std::vector<FinSet>& family, Level l) {
  return is_captured(s, family, l) && family.size() == s.type().n(l);
}

bool is_captured_pair(const Scheme& s, Ordinal a, Ordinal b, Level l) {
  if (a >= b) throw Error(Errc::NotDeltaSystem, "pair members must increase");
  if (l == 0 || l > s.K()) return false;
  return s.xi(a, l) == 0 && s.xi(b, l) == 1 && s.rho(a, b) == l && s.delta(a, b) == l;
}

std::vector<FinSet> singletons(const FinSet& D) {
  std::vector<FinSet> out;
  out.reserve(D.size());
  for (Ordinal x : D) out.push_back(FinSet{x});
  return out;
}

namespace {

// C(n, k), saturating at max.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (acc > top / (n - k + i)) return top;
    acc = acc * (n - k + i) / i;
  }
  return acc;
}

std::optional<CaptureCertificate> check_tuple(const Scheme& s, const FinSet& tuple, const std::set<Level>& levels) {
  const Level l = s.rho(tuple(0), tuple(1));
  if (!levels.empty() && !levels.contains(l)) return std::nullopt;
  return capture_certificate(s, singletons(tuple), l);
}

}  // namespace

CaptureSearchResult find_captured_tuples(const Scheme& s, const FinSet& S, std::size_t n,
                                         const std::set<Level>& levels, const CaptureSearchOptions& opts) {
  CaptureSearchResult result;
  result.seed = opts.seed;
  for (Ordinal x : S) s.rho(x, x);
  if (n < 2 || n > S.size()) return result;

  std::vector<FinSet> tuples;
  const std::uint64_t total = binomial(S.size(), n);
  if (total <= opts.cap) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (;;) {
      std::vector<Ordinal> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = S(idx[i]);
      tuples.emplace_back(std::move(v));
      std::size_t i = n;
      while (i > 0 && idx[i - 1] == S.size() - n + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
  } else {
    result.sampled = true;
    std::mt19937_64 rng(opts.seed);
    std::set<FinSet> drawn;
    for (std::uint64_t draw = 0; draw < opts.cap; ++draw) {
      // Floyd's algorithm: a uniform n-subset of positions.
      std::set<std::size_t> picked;
      for (std::size_t j = S.size() - n; j < S.size(); ++j) {
        const std::size_t t = static_cast<std::size_t>(rng() % (j + 1));
        if (!picked.insert(t).second) picked.insert(j);
      }
      std::vector<Ordinal> v;
      for (std::size_t p : picked) v.push_back(S(p));
      drawn.emplace(std::move(v));
    }
    tuples.assign(drawn.begin(), drawn.end());
  }
  result.examined = tuples.size();
  result.digest = 0xcbf29ce484222325ULL;
  for (const FinSet& t : tuples) {
    for (Ordinal x : t) result.digest = (result.digest ^ x) * 0x100000001b3ULL;
    result.digest = (result.digest ^ 0xff) * 0x100000001b3ULL;
  }

  std::vector<std::optional<CaptureCertificate>> found(tuples.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(tuples.size())));
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < tuples.size(); i += workers) found[i] = check_tuple(s, tuples[i], levels);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  for (auto& cert : found) {
    if (cert) result.certificates.push_back(std::move(*cert));
  }
  std::stable_sort(result.certificates.begin(), result.certificates.end(),
                   [](const CaptureCertificate& a, const CaptureCertificate& b) {
                     return std::tie(a.level, a.members) < std::tie(b.level, b.members);
                   });
  return result;
}

std::set<Level> project(const Scheme& s, const FinSet& S, std::size_t n) {
  CaptureSearchOptions opts;
  opts.cap = std::numeric_limits<std::uint64_t>::max();
  std::set<Level> out;
  for (const auto& cert : find_captured_tuples(s, S, n, {}, opts).certificates) out.insert(cert.level);
  return out;
}

Ordinal sq_bracket(const Scheme& s, Ordinal a, Ordinal b) {
  if (a == b) throw Error(Errc::EqualArguments, "the square bracket needs two distinct ordinals");
  if (a > b) std::swap(a, b);
  const Level l = s.rho(a, b);
  const FinSet window = s.closure(b, l - 1);
  for (Ordinal x : window) {
    if (x >= a) return x;
  }
  throw Error(Errc::OutOfDomain, "empty bracket window");  // unreachable: b is in the window
}

Ordinal sq_bracket_from_decomposition(const Scheme& s, Ordinal a, Ordinal b) {
  if (a == b) throw Error(Errc::EqualArguments, "the square bracket needs two distinct ordinals");
  if (a > b) std::swap(a, b);
  const Level l = s.rho(a, b);
  for (const FinSet& F : s.level(l)) {
    if (!F.contains(a) || !F.contains(b)) continue;
    const Decomposition d = canonical_decomposition(s, F);
    return d.children.at(static_cast<std::size_t>(s.xi(b, l))).minus(d.root).min();
  }
  throw Error(Errc::NotAMember, "no level-rho member holds both arguments");
}

std::set<Ordinal> sq_bracket_set(const Scheme& s, const FinSet& S) {
  std::set<Ordinal> out;
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (std::size_t j = i + 1; j < S.size(); ++j) {
      const Level l = s.rho(S(i), S(j));
      if (is_captured_pair(s, S(i), S(j), l)) out.insert(sq_bracket(s, S(i), S(j)));
    }
  }
  return out;
}

FinSet h_ideal_generator(const Scheme& s, Ordinal a, Level n) {
  s.rho(a, a);
  if (n > s.K()) throw Error(Errc::OutOfDomain, "level above K");
  std::vector<Ordinal> out;
  for (Ordinal x = 0; x < a; ++x) {
    bool in = true;
    for (Level m = n + 1; m <= s.K() && in; ++m) {
      const int xa = s.xi(a, m);
      in = xa == -1 || s.xi(x, m) <= xa;
    }
    if (in) out.push_back(x);
  }
  return FinSet(std::move(out));
}

}  // namespace schemelab
