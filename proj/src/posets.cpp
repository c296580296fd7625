#include "schemelab/posets.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "schemelab/error.hpp"

namespace schemelab {

std::string poset_kind_name(PosetKind k) {
  switch (k) {
    case PosetKind::SEP: return "SEP";
    case PosetKind::CHI0: return "CHI0";
    case PosetKind::CHI1: return "CHI1";
    case PosetKind::DN: return "DN";
    case PosetKind::BIORTH: return "BIORTH";
  }
  return "?";
}

PosetKind parse_poset_kind(const std::string& name) {
  std::string up = name;
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
  for (PosetKind k : {PosetKind::SEP, PosetKind::CHI0, PosetKind::CHI1, PosetKind::DN, PosetKind::BIORTH}) {
    if (poset_kind_name(k) == up) return k;
  }
  throw Error(Errc::ParseError, "unknown poset kind '" + name + "'");
}

FinSet condition_support(const Condition& c) {
  if (const auto* m = std::get_if<SepCondition>(&c)) {
    std::vector<Ordinal> dom;
    for (const auto& [a, v] : *m) dom.push_back(a);
    return FinSet(std::move(dom));
  }
  return std::get<FinSet>(c);
}

std::string condition_str(const Condition& c) {
  std::ostringstream out;
  if (const auto* m = std::get_if<SepCondition>(&c)) {
    out << '{';
    bool first = true;
    for (const auto& [a, v] : *m) {
      out << (first ? "" : ", ") << a << ':' << v;
      first = false;
    }
    out << '}';
  } else {
    out << '{' << std::get<FinSet>(c).str() << '}';
  }
  return out.str();
}

PosetView PosetView::over_pregap(PosetKind kind, Pregap g) {
  if (kind == PosetKind::DN) throw Error(Errc::WrongPosetKind, "DN is backed by a scheme, not a pregap");
  PosetView v;
  v.kind_ = kind;
  v.universe_ = g.index;
  v.pregap_ = std::make_shared<const Pregap>(std::move(g));
  return v;
}

PosetView PosetView::dn(std::shared_ptr<const Scheme> s, std::size_t n, std::set<Level> A) {
  if (n < 2) throw Error(Errc::OutOfDomain, "D_n needs n >= 2");
  PosetView v;
  v.kind_ = PosetKind::DN;
  v.universe_ = s->domain();
  v.scheme_ = std::move(s);
  v.n_ = n;
  v.A_ = std::move(A);
  return v;
}

const Pregap& PosetView::pregap() const {
  if (!pregap_) throw Error(Errc::WrongPosetKind, poset_kind_name(kind_) + " has no pregap");
  return *pregap_;
}

const Scheme& PosetView::scheme() const {
  if (!scheme_) throw Error(Errc::WrongPosetKind, poset_kind_name(kind_) + " has no scheme");
  return *scheme_;
}

Condition PosetView::empty_condition() const {
  if (kind_ == PosetKind::SEP) return SepCondition{};
  return FinSet{};
}

namespace {

void check_shape(const PosetView& v, const Condition& c) {
  const bool is_map = std::holds_alternative<SepCondition>(c);
  if (is_map != (v.kind() == PosetKind::SEP)) {
    throw Error(Errc::WrongPosetKind, poset_kind_name(v.kind()) + " conditions are " +
                                          (v.kind() == PosetKind::SEP ? "partial maps" : "finite sets"));
  }
}

std::size_t position(const Pregap& g, Ordinal a) { return static_cast<std::size_t>(g.index.index_of(a)); }

bool sep_clause(const Pregap& g, const SepCondition& p) {
  for (const auto& [a, va] : p) {
    const std::size_t i = position(g, a);
    for (const auto& [b, vb] : p) {
      if (!g.left[i].intersect(g.right[position(g, b)]).bounded_by(std::max(va, vb))) return false;
    }
  }
  return true;
}

bool chi0_clause(const Pregap& g, const FinSet& p) {
  FinSet L, R;
  for (Ordinal a : p) {
    L = L.unite(g.left[position(g, a)]);
    R = R.unite(g.right[position(g, a)]);
  }
  return !L.intersects(R);
}

bool crosswise_clause(const Pregap& g, const FinSet& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    const std::size_t x = position(g, p(i));
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      const std::size_t y = position(g, p(j));
      if (!g.left[x].intersects(g.right[y]) && !g.left[y].intersects(g.right[x])) return false;
    }
  }
  return true;
}

bool dn_clause(const PosetView& v, const FinSet& p) {
  if (v.levels().empty() || p.size() < v.n()) return true;
  CaptureSearchOptions opts;
  opts.cap = std::numeric_limits<std::uint64_t>::max();
  return find_captured_tuples(v.scheme(), p, v.n(), v.levels(), opts).certificates.empty();
}

}  // namespace

bool is_condition(const PosetView& v, const Condition& c) {
  check_shape(v, c);
  const FinSet support = condition_support(c);
  if (!support.subset_of(v.universe())) {
    throw Error(Errc::OutOfUniverse, "{" + support.minus(v.universe()).str() + "} outside the universe");
  }
  switch (v.kind()) {
    case PosetKind::SEP: return sep_clause(v.pregap(), std::get<SepCondition>(c));
    case PosetKind::CHI0: return chi0_clause(v.pregap(), std::get<FinSet>(c));
    case PosetKind::CHI1:
    case PosetKind::BIORTH: return crosswise_clause(v.pregap(), std::get<FinSet>(c));
    case PosetKind::DN: return dn_clause(v, std::get<FinSet>(c));
  }
  return false;
}

std::optional<Condition> condition_union(const Condition& p, const Condition& q) {
  if (const auto* mp = std::get_if<SepCondition>(&p)) {
    SepCondition out = *mp;
    for (const auto& [a, v] : std::get<SepCondition>(q)) {
      auto [it, fresh] = out.emplace(a, v);
      if (!fresh && it->second != v) return std::nullopt;
    }
    return out;
  }
  return std::get<FinSet>(p).unite(std::get<FinSet>(q));
}

bool compatible(const PosetView& v, const Condition& p, const Condition& q) {
  check_shape(v, p);
  check_shape(v, q);
  const auto u = condition_union(p, q);
  return u && is_condition(v, *u);
}

bool DenseTarget::met_by(const Condition& c) const { return condition_support(c).contains(beta); }

std::vector<DenseTarget> dense_meet_targets(const PosetView& v, const FinSet& betas) {
  if (!betas.subset_of(v.universe())) throw Error(Errc::OutOfUniverse, "target outside the universe");
  std::vector<DenseTarget> out;
  for (Ordinal b : betas) out.push_back({b});
  return out;
}

FilterResult greedy_filter(const PosetView& v, const std::vector<DenseTarget>& targets, const Condition& seed,
                           const FilterOptions& opts) {
  if (!is_condition(v, seed)) throw Error(Errc::OutOfDomain, "seed " + condition_str(seed) + " is not a condition");
  FilterResult f;
  f.chain.push_back(seed);
  for (const DenseTarget& t : targets) {
    const Condition& cur = f.chain.back();
    if (t.met_by(cur)) continue;
    if (!v.universe().contains(t.beta)) throw Error(Errc::OutOfUniverse, "target outside the universe");
    std::optional<Condition> next;
    if (v.kind() == PosetKind::SEP) {
      Natural lo = 0;
      for (Natural bound = std::max<Natural>(1, opts.initial_bound); !next && lo < opts.max_bound;
           bound = std::min(opts.max_bound, bound * 2)) {
        for (Natural val = lo; val < bound && !next; ++val) {
          SepCondition c = std::get<SepCondition>(cur);
          c.emplace(t.beta, val);
          if (is_condition(v, c)) next = std::move(c);
        }
        lo = bound;
      }
    } else {
      const Condition c = std::get<FinSet>(cur).unite(FinSet{t.beta});
      if (is_condition(v, c)) next = c;
    }
    if (!next) {
      f.complete = false;
      f.failed_target = t.beta;
      f.failure = "no extension of " + condition_str(cur) + " meets M_" + std::to_string(t.beta);
      return f;
    }
    f.chain.push_back(std::move(*next));
  }
  return f;
}

SeparatingFunction extract_separating(const PosetView& v, const FilterResult& f) {
  if (v.kind() != PosetKind::SEP) throw Error(Errc::WrongPosetKind, "separating functions come from SEP filters");
  const Pregap& g = v.pregap();
  SeparatingFunction s;
  for (Ordinal a : g.index) {
    std::optional<Natural> value;
    for (const Condition& c : f.chain) {
      const auto& m = std::get<SepCondition>(c);
      auto it = m.find(a);
      if (it == m.end()) continue;
      if (value && *value != it->second) throw std::logic_error("filter conditions disagree");
      value = it->second;
    }
    if (!value) throw Error(Errc::IncompleteFilter, "filter misses index " + std::to_string(a));
    s.left.push_back(*value);
    s.right.push_back(*value);
  }
  return s;
}

namespace {

FinSet anchors_of(const Pregap& g, const FinSet& dom) {
  FinSet z;
  for (Ordinal a : dom) {
    const std::size_t i = position(g, a);
    z = z.unite(g.anchors.empty() ? FinSet{a} : g.anchors[i]);
  }
  return z;
}

// Captured level of the ordered pair of blocks, if any.
std::optional<Level> captured_level(const Scheme& s, const std::vector<FinSet>& blocks) {
  if (!is_root_tail_tail(blocks) || blocks[0].size() != blocks[1].size()) return std::nullopt;
  for (Level l = 1; l <= s.K(); ++l) {
    if (is_captured(s, blocks, l)) return l;
  }
  return std::nullopt;
}

bool sep_hypotheses(const Pregap& g, const Scheme& s, const SepCondition& p, const SepCondition& q) {
  if (p.size() != q.size() || p.empty()) return false;
  const FinSet dp = condition_support(p), dq = condition_support(q);
  for (std::size_t i = 0; i < dp.size(); ++i) {
    if (p.at(dp(i)) != q.at(dq(i))) return false;
  }
  const std::vector<FinSet> doms = precedes(dp.minus(dq), dq.minus(dp)) ? std::vector{dp, dq} : std::vector{dq, dp};
  if (!is_root_tail_tail(doms)) return false;
  const FinSet R = dp.intersect(dq);
  if (!R.empty() && !(R.max() + 1 < dp.minus(R).min())) return false;
  if (dq.contains(dp.max() + 1) || dp.contains(dq.max() + 1)) return false;

  const FinSet zp = anchors_of(g, doms[0]), zq = anchors_of(g, doms[1]);
  const auto l = captured_level(s, {zp, zq});
  Natural top = 0;
  for (const auto& [a, v] : p) top = std::max(top, v);
  return l && *l > top + 1;
}

}  // namespace

CaptureLawReport check_sep_capture_law(const PosetView& v, const Scheme& s,
                                       const std::vector<std::pair<SepCondition, SepCondition>>& pairs) {
  if (v.kind() != PosetKind::SEP) throw Error(Errc::WrongPosetKind, "the SEP law needs a SEP view");
  CaptureLawReport rep;
  for (const auto& [p, q] : pairs) {
    ++rep.examined;
    if (!is_condition(v, p) || !is_condition(v, q)) continue;
    if (p != q && !sep_hypotheses(v.pregap(), s, p, q)) continue;
    ++rep.applicable;
    const auto u = condition_union(p, q);
    if (!u || !is_condition(v, *u)) {
      rep.counterexamples.push_back("p=" + condition_str(p) + " q=" + condition_str(q) + ": p ∪ q is not a condition");
    }
  }
  return rep;
}

CaptureLawReport check_dn_capture_law(const PosetView& v, const std::vector<DnQuad>& quads) {
  if (v.kind() != PosetKind::DN) throw Error(Errc::WrongPosetKind, "the D_n law needs a DN view");
  CaptureLawReport rep;
  for (const DnQuad& q : quads) {
    ++rep.examined;
    const std::vector<FinSet> four{q.p_delta, q.p_delta1, q.p_gamma, q.p_gamma1};
    if (!is_root_tail_tail(four)) continue;
    if (std::any_of(four.begin(), four.end(), [&](const FinSet& p) { return p.size() != four[0].size(); })) continue;
    if (!std::all_of(four.begin(), four.end(), [&](const FinSet& p) { return is_condition(v, p); })) continue;
    if (!captured_level(v.scheme(), {q.p_delta.unite(q.p_delta1), q.p_gamma.unite(q.p_gamma1)})) continue;
    ++rep.applicable;
    const FinSet u = q.p_delta.unite(q.p_gamma1);
    if (!is_condition(v, u)) {
      rep.counterexamples.push_back("quad " + to_string(four) + ": {" + u.str() + "} is not a condition");
    }
  }
  return rep;
}

namespace {

std::vector<Condition> bounded_conditions(const PosetView& v, const FinSet& universe, const AntichainOptions& opts) {
  std::vector<Condition> out;
  const std::size_t N = universe.size();
  std::vector<Ordinal> chosen;
  std::function<void(std::size_t)> subsets = [&](std::size_t from) {
    if (!chosen.empty()) {
      const FinSet dom(chosen);
      if (v.kind() == PosetKind::SEP) {
        std::vector<Natural> vals(dom.size(), 0);
        for (;;) {
          SepCondition c;
          for (std::size_t i = 0; i < dom.size(); ++i) c.emplace(dom(i), vals[i]);
          if (is_condition(v, c)) out.emplace_back(std::move(c));
          std::size_t i = 0;
          while (i < vals.size() && vals[i] == opts.max_value) vals[i++] = 0;
          if (i == vals.size()) break;
          ++vals[i];
        }
      } else if (is_condition(v, dom)) {
        out.emplace_back(dom);
      }
    }
    if (chosen.size() == opts.max_size) return;
    for (std::size_t i = from; i < N; ++i) {
      chosen.push_back(universe(i));
      subsets(i + 1);
      chosen.pop_back();
    }
  };
  subsets(0);
  return out;
}

}  // namespace

AntichainResult exhaustive_antichain(const PosetView& v, const FinSet& universe, const AntichainOptions& opts) {
  if (!universe.subset_of(v.universe())) throw Error(Errc::OutOfUniverse, "search universe leaves the poset's");
  AntichainResult res;
  const std::vector<Condition> cands = bounded_conditions(v, universe, opts);
  res.candidates = cands.size();
  const std::size_t N = cands.size();
  std::vector<std::vector<bool>> apart(N, std::vector<bool>(N, false));
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i + 1; j < N; ++j) apart[i][j] = apart[j][i] = !compatible(v, cands[i], cands[j]);
  }

  // Bron-Kerbosch with pivoting on the incompatibility graph.
  std::vector<std::size_t> best, current;
  std::function<void(std::vector<std::size_t>, std::vector<std::size_t>)> expand =
      [&](std::vector<std::size_t> P, std::vector<std::size_t> X) {
        if (res.budget_exceeded) return;
        if (++res.steps > opts.budget) {
          res.budget_exceeded = true;
          return;
        }
        if (P.empty() && X.empty()) {
          if (current.size() > best.size()) best = current;
          return;
        }
        if (current.size() + P.size() <= best.size()) return;
        std::size_t pivot = P.empty() ? X.front() : P.front();
        std::size_t most = 0;
        for (const auto* side : {&P, &X}) {
          for (std::size_t u : *side) {
            std::size_t deg = 0;
            for (std::size_t w : P) deg += apart[u][w];
            if (deg > most) most = deg, pivot = u;
          }
        }
        std::vector<std::size_t> order;
        for (std::size_t u : P) {
          if (!apart[pivot][u]) order.push_back(u);
        }
        for (std::size_t u : order) {
          std::vector<std::size_t> P2, X2;
          for (std::size_t w : P) {
            if (apart[u][w]) P2.push_back(w);
          }
          for (std::size_t w : X) {
            if (apart[u][w]) X2.push_back(w);
          }
          current.push_back(u);
          expand(std::move(P2), std::move(X2));
          current.pop_back();
          P.erase(std::find(P.begin(), P.end(), u));
          X.push_back(u);
        }
      };
  std::vector<std::size_t> all(N);
  for (std::size_t i = 0; i < N; ++i) all[i] = i;
  expand(all, {});

  std::sort(best.begin(), best.end());
  for (std::size_t i : best) res.antichain.push_back(cands[i]);
  return res;
}

std::optional<DeltaSystemWitness> delta_system_refine(const std::vector<FinSet>& family) {
  std::set<FinSet> distinct(family.begin(), family.end());
  std::set<std::size_t> sizes;
  for (const FinSet& F : distinct) sizes.insert(F.size());

  std::optional<DeltaSystemWitness> best;
  for (std::size_t c : sizes) {
    std::vector<FinSet> same;
    for (const FinSet& F : distinct) {
      if (F.size() == c) same.push_back(F);
    }
    std::set<FinSet> roots{FinSet{}};
    for (std::size_t i = 0; i < same.size(); ++i) {
      for (std::size_t j = i + 1; j < same.size(); ++j) roots.insert(same[i].intersect(same[j]));
    }
    for (const FinSet& R : roots) {
      if (R.size() >= c) continue;
      // Members with R as a proper initial segment; then pick tails as disjoint
      // intervals, earliest right end first.
      std::vector<FinSet> fits;
      for (const FinSet& F : same) {
        if (R.initial_segment_of(F)) fits.push_back(F);
      }
      std::sort(fits.begin(), fits.end(), [](const FinSet& a, const FinSet& b) {
        return a.max() != b.max() ? a.max() < b.max() : a < b;
      });
      std::vector<FinSet> chosen;
      for (const FinSet& F : fits) {
        const FinSet tail = F.minus(R);
        if (chosen.empty() || chosen.back().max() < tail.min()) chosen.push_back(F);
      }
      if (chosen.size() < 2) continue;
      if (!best || chosen.size() > best->members.size() ||
          (chosen.size() == best->members.size() && chosen < best->members)) {
        best = DeltaSystemWitness{R, chosen};
      }
    }
  }
  return best;
}

}  // namespace schemelab
