#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "turaev/enumerate.hpp"
#include "turaev/simplicity.hpp"

namespace turaev {

// Options for the exhaustive verification sweep. threads == 1 runs the
// serial reference loop; threads == 0 uses every hardware thread; any
// other value pins the worker count. Results are identical regardless:
// per-word results land in preallocated slots and are merged in order.
struct SweepOptions {
  std::size_t max_len = 7;
  std::vector<int> powers = {3, 4};
  std::size_t cojacobi_max_len = 7;
  int threads = 1;
};

struct Violation {
  std::string check;   // which identity failed
  std::string word;    // canonical form of the offending word
  std::string detail;
};

struct VerifySummary {
  std::size_t words = 0;
  std::size_t nonpower_words = 0;
  std::size_t linked_pairs = 0;
  std::size_t symmetry_checks = 0;
  std::size_t lift_checks = 0;
  std::size_t eq1_checks = 0;
  std::size_t norm_checks = 0;
  std::size_t simple_checks = 0;
  std::size_t sharpness_checks = 0;
  std::size_t sharpness_m1_coincidences = 0;
  std::size_t coskew_checks = 0;
  std::size_t cojacobi_checks = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

// Runs every module identity over all canonical words up to max_len:
// frontier-letter and injectivity conditions on each enumerated pair,
// partner symmetry, power lifting against direct enumeration, the closed
// form of the cobracket of powers against expansion, the norm identity,
// the delta(v^3) = 0 decision equivalence, distinctness of the power-
// extended factor classes, and the coalgebra axioms.
VerifySummary exhaustive_verify(const Alphabet& ab, const SweepOptions& opt);

// All nonpower canonical words up to max_len whose cobracket vanishes but
// whose linked-pair set is nonempty (self-intersecting classes invisible
// to the cobracket). Sorted by (length, canonical form).
std::vector<ClassReport> search_turaev1_counterexamples(const Alphabet& ab,
                                                        std::size_t max_len,
                                                        int threads = 1);

}  // namespace turaev
