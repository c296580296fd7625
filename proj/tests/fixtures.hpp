#pragma once

#include <vector>

#include "schemelab/scheme.hpp"
#include "schemelab/typeseq.hpp"

namespace fixtures {

inline const schemelab::Scheme& k2() {
  static const schemelab::Scheme s = schemelab::Scheme::build(schemelab::make_type_prefix({{1, 2, 0}, {2, 2, 1}}));
  return s;
}

inline const schemelab::Scheme& k3() {
  static const schemelab::Scheme s =
      schemelab::Scheme::build(schemelab::make_type_prefix({{1, 2, 0}, {2, 2, 1}, {3, 2, 0}}));
  return s;
}

// A handful of small schemes with mixed fan-out and root sizes.
inline std::vector<schemelab::Scheme> small_schemes() {
  std::vector<schemelab::Scheme> out;
  for (schemelab::Level K = 1; K <= 3; ++K) {
    for (const auto& t : schemelab::enumerate_type_prefixes(K, 3, 24)) out.push_back(schemelab::Scheme::build(t));
  }
  return out;
}

inline std::vector<schemelab::FinSet> sets(std::initializer_list<std::initializer_list<schemelab::Ordinal>> ls) {
  std::vector<schemelab::FinSet> out;
  for (auto l : ls) out.emplace_back(l);
  return out;
}

}  // namespace fixtures
