#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schemelab/typeseq.hpp"

namespace schemelab::verify {

struct Options {
  std::uint64_t seed = 1;
  unsigned threads = 1;
  // Swap in deliberately broken fixtures; the axioms, examples and gaps suites
  // must then fail.
  bool corrupt = false;
  // Capture agreement: every root-tail-tail family on every grid scheme up to
  // this domain size, one representative scheme per size up to the next bound,
  // and random families everywhere else.
  Ordinal capture_exhaustive_domain = 12;
  Ordinal capture_representative_domain = 24;
  std::size_t capture_random_families = 2000;
};

struct SuiteResult {
  std::string name;
  std::string title;
  bool passed = true;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> messages;  // first few failures
};

// "types", "axioms", "laws", "oracle", "examples", "gaps", "posets", in order.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& name, const Options& opts);

// Valid prefixes with K <= 4, n_k <= 3, m_K <= 200.
std::vector<TypeSequence> prefix_grid();
// 50 seeded random prefixes with n_k <= 3 and m_K <= 512.
std::vector<TypeSequence> random_prefixes(std::uint64_t seed, std::size_t count = 50);

}  // namespace schemelab::verify
