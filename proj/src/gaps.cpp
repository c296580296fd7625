#include "schemelab/gaps.hpp"

#include <algorithm>

#include "schemelab/capture.hpp"
#include "schemelab/error.hpp"

namespace schemelab {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Raw: return "raw";
    case Provenance::Hausdorff: return "hausdorff";
    case Provenance::TodorcevicRestricted: return "todorcevic";
    case Provenance::LevelwiseDifference: return "levelwise-difference";
  }
  return "unknown";
}

bool Pregap::is_normal() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (left[i].intersects(right[i])) return false;
  }
  return true;
}

Pregap hausdorff_gap(const Scheme& s) {
  if (!s.type().is_two_type()) {
    throw Error(Errc::NotTwoScheme, "the Hausdorff construction needs n_k = 2 at every level");
  }
  Pregap g;
  g.provenance = Provenance::Hausdorff;
  g.index = s.domain();
  for (Ordinal a = 0; a < s.domain_size(); ++a) {
    std::vector<Ordinal> L, R;
    for (Level k = 1; k <= s.K(); ++k) {
      const int x = s.xi(a, k);
      if (x < 0) continue;
      L.push_back(2 * k + static_cast<Natural>(x));
      R.push_back(2 * k + static_cast<Natural>(1 - x));
    }
    g.left.emplace_back(std::move(L));
    g.right.emplace_back(std::move(R));
    g.anchors.push_back(FinSet{a});
  }
  return g;
}

FinSet n_window(Level k) { return FinSet::range(0, 2 * k + 2); }

namespace {

bool within(const FinSet& x, const FinSet& window) { return x.subset_of(window); }

void expect(std::vector<GapViolation>& out, bool ok, const std::string& check, Ordinal a, Ordinal b,
            const std::string& detail) {
  if (!ok) out.push_back({check, a, b, detail});
}

}  // namespace

std::vector<GapViolation> check_interhausdorff(const Scheme& s, const Pregap& g) {
  std::vector<GapViolation> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Ordinal a = g.index(i);
    expect(out, !g.left[i].intersects(g.right[i]), "0", a, a, "L ∩ R ≠ ∅");
    const Natural top = std::max(g.left[i].empty() ? 0 : g.left[i].max(), g.right[i].empty() ? 0 : g.right[i].max());
    for (Natural k = 0; 2 * k <= top; ++k) {
      const FinSet pair{2 * k, 2 * k + 1};
      expect(out, g.left[i].intersect(pair).size() <= 1, "1", a, a, "L meets {2k,2k+1} twice, k=" + std::to_string(k));
      expect(out, g.right[i].intersect(pair).size() <= 1, "1", a, a, "R meets {2k,2k+1} twice, k=" + std::to_string(k));
    }
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const Ordinal a = g.index(i), b = g.index(j);
      const FinSet window = n_window(s.rho(a, b));
      const FinSet &La = g.left[i], &Lb = g.left[j], &Ra = g.right[i], &Rb = g.right[j];
      expect(out, within(La.minus(Lb), window), "2", a, b, "L_α \\ L_β ⊄ N_ρ");
      expect(out, within(Ra.minus(Rb), window), "2", a, b, "R_α \\ R_β ⊄ N_ρ");
      expect(out, within(La.intersect(Rb), window), "2", a, b, "L_α ∩ R_β ⊄ N_ρ");
      expect(out, within(Lb.intersect(Ra), window), "2", a, b, "L_β ∩ R_α ⊄ N_ρ");
      const Level d = s.delta(a, b);
      const FinSet low = n_window(d - 1);
      expect(out, La.intersect(low) == Lb.intersect(low), "3", a, b, "L_α, L_β differ below N_{Δ-1}");
      expect(out, Ra.intersect(low) == Rb.intersect(low), "3", a, b, "R_α, R_β differ below N_{Δ-1}");
    }
  }
  return out;
}

std::vector<GapViolation> check_hausdorff_condition(const Scheme& s, const Pregap& g) {
  std::vector<GapViolation> out;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const Ordinal b = g.index(j);
    for (Level k = 0; k <= s.K(); ++k) {
      const FinSet cl = s.closure(b, k);
      for (std::size_t i = 0; i < j; ++i) {
        const Ordinal a = g.index(i);
        if (g.left[j].intersect(g.right[i]).bounded_by(k) && !cl.contains(a)) {
          out.push_back({"hausdorff", a, b, "L_β ∩ R_α ⊆ " + std::to_string(k) + " but α ∉ (β)_k"});
        }
      }
    }
  }
  return out;
}

Pregap levelwise_diff(const Pregap& g, const FinSet& positions) {
  if (positions.size() < 2) throw Error(Errc::TooFewIndices, "need at least two index positions");
  if (positions.max() >= g.size()) throw Error(Errc::OutOfDomain, "position outside the pregap index");
  Pregap d;
  d.provenance = Provenance::LevelwiseDifference;
  d.index = FinSet::range(0, static_cast<Ordinal>(positions.size() - 1));
  for (std::size_t i = 0; i + 1 < positions.size(); ++i) {
    const std::size_t lo = positions(i), hi = positions(i + 1);
    d.left.push_back(g.left[hi].minus(g.left[lo]));
    d.right.push_back(g.right[hi].minus(g.right[lo]));
    d.anchors.push_back(g.anchors.empty() ? FinSet{g.index(lo), g.index(hi)}
                                          : g.anchors[lo].unite(g.anchors[hi]));
  }
  return d;
}

std::vector<GapViolation> check_levelwise_even_odd(const Scheme& s, const Pregap& g) {
  std::vector<GapViolation> out;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    const Ordinal a = g.index(i);
    if (g.index(i + 1) != a + 1) continue;
    const FinSet window = n_window(s.rho(a, a + 1));
    for (Natural x : g.left[i + 1].minus(g.left[i]).minus(window)) {
      expect(out, x % 2 == 0, "even", a, a + 1, "odd " + std::to_string(x) + " in L_{α+1} \\ L_α outside N_ρ");
    }
    for (Natural x : g.right[i + 1].minus(g.right[i]).minus(window)) {
      expect(out, x % 2 == 1, "odd", a, a + 1, "even " + std::to_string(x) + " in R_{α+1} \\ R_α outside N_ρ");
    }
  }
  return out;
}

Pregap todorcevic_restrict(const Scheme& s, const Pregap& g, const std::set<Level>& p0) {
  std::vector<Ordinal> c;
  for (Level k : p0) {
    if (k == 0 || k > s.K()) continue;
    c.push_back(2 * k);
    c.push_back(2 * k + 1);
  }
  const FinSet C = FinSet::from_unsorted(std::move(c));
  Pregap out = g;
  out.provenance = Provenance::TodorcevicRestricted;
  for (std::size_t i = 0; i < g.size(); ++i) {
    out.left[i] = g.left[i].intersect(C);
    out.right[i] = g.right[i].intersect(C);
  }
  return out;
}

std::vector<GapViolation> check_todorcevic_capture_laws(const Scheme& s, const Pregap& restricted,
                                                        const std::set<Level>& p0, const std::set<Level>& p1) {
  std::vector<GapViolation> out;
  for (std::size_t i = 0; i < restricted.size(); ++i) {
    for (std::size_t j = i + 1; j < restricted.size(); ++j) {
      const Ordinal a = restricted.index(i), b = restricted.index(j);
      const Level l = s.rho(a, b);
      if (!is_captured_pair(s, a, b, l)) continue;
      if (p0.contains(l)) {
        expect(out, restricted.left[i].intersect(restricted.right[j]) == FinSet{2 * l}, "P0", a, b,
               "L^C_α ∩ R^C_β ≠ {2l}, l=" + std::to_string(l));
      }
      if (p1.contains(l)) {
        expect(out, restricted.left[i].subset_of(restricted.left[j]), "P1", a, b, "L^C_α ⊄ L^C_β");
        expect(out, restricted.right[i].subset_of(restricted.right[j]), "P1", a, b, "R^C_α ⊄ R^C_β");
      }
    }
  }
  return out;
}

std::vector<GapViolation> check_tower_and_capture(const Scheme& s, const Pregap& g) {
  std::vector<GapViolation> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const Ordinal a = g.index(i), b = g.index(j);
      const Level l = s.rho(a, b);
      const FinSet window = n_window(l);
      expect(out, g.left[i].minus(g.left[j]).subset_of(window), "tower", a, b, "L_α \\ L_β ⊄ N_ρ");
      expect(out, g.right[i].minus(g.right[j]).subset_of(window), "tower", a, b, "R_α \\ R_β ⊄ N_ρ");
      if (is_captured_pair(s, a, b, l)) {
        expect(out, g.left[j].contains(2 * l + 1) && g.right[i].contains(2 * l + 1), "capture", a, b,
               "2l+1 ∉ L_β ∩ R_α");
        expect(out, g.left[i].contains(2 * l) && g.right[j].contains(2 * l), "capture", a, b, "2l ∉ L_α ∩ R_β");
      }
    }
  }
  return out;
}

bool is_biorthogonal(const Pregap& g) {
  if (!g.is_normal()) throw Error(Errc::NotNormal, "biorthogonality is defined for normal pregaps");
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!g.left[i].intersects(g.right[j]) && !g.left[j].intersects(g.right[i])) return false;
    }
  }
  return true;
}

bool validate_separating(const Pregap& g, const SeparatingFunction& s) {
  if (s.left.size() != g.size() || s.right.size() != g.size()) return false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (!g.left[i].intersect(g.right[j]).bounded_by(std::max(s.left[i], s.right[j]))) return false;
    }
  }
  return true;
}

FinSet set_from_separating(const Pregap& g, const SeparatingFunction& s) {
  if (!validate_separating(g, s)) throw Error(Errc::InvalidSeparating, "thresholds do not separate the pregap");
  FinSet C;
  for (std::size_t i = 0; i < g.size(); ++i) {
    C = C.unite(g.left[i].minus(FinSet::range(0, s.left[i] + 1)));
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    const FinSet tail = g.right[i].minus(FinSet::range(0, s.right[i] + 1));
    if (tail.intersects(C)) throw std::logic_error("separating set meets a right tail");
  }
  return C;
}

}  // namespace schemelab
