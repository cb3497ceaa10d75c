#pragma once

#include <cstddef>
#include <optional>

#include "turaev/cobracket.hpp"

namespace turaev {

// Raised when an operation defined only for nonpower classes receives a
// proper power; carries the primitive root so callers can name it.
struct power_input_error : invalid_input {
  power_input_error(CyclicWord primitive_root, int exponent,
                    const std::string& what)
      : invalid_input(what),
        primitive(std::move(primitive_root)),
        exponent(exponent) {}

  CyclicWord primitive;
  int exponent;
};

// Everything the decision procedure knows about one class.
struct ClassReport {
  CyclicWord word;
  CyclicWord primitive;
  int exponent = 1;
  std::size_t linked_pair_count = 0;
  // |LP1|/2; defined only for nonpower classes (exponent == 1).
  std::optional<std::size_t> self_intersection;
  bool is_power_of_simple = false;
};

// |LP1(v)| / 2 for a nonpower class. Throws power_input_error on proper
// powers (there is no formula for powers, only an inequality).
std::size_t self_intersection(const CyclicWord& v, const Alphabet& ab);

// Whether the class contains a power of a simple curve, decided by LP1
// emptiness. With cross_check set, additionally evaluates the cobracket of
// v^3 by the closed form and by direct enumeration on the expanded word,
// and verifies all three verdicts agree.
bool is_power_of_simple(const CyclicWord& v, const Alphabet& ab,
                        bool cross_check = false);

struct NormIdentityReport {
  long long norm = 0;          // Manhattan norm of the cobracket of v^p
  std::size_t lp_count = 0;    // |LP1(v)|
  std::size_t s = 0;           // self-intersection number of v
  bool holds = false;          // norm == p^2 * lp_count == 2 p^2 s
};

// Checks the norm identity M(delta(v^p)) = p^2 |LP1(v)| = 2 p^2 s(v).
// Requires p >= 4 and v nonpower.
NormIdentityReport verify_norm_identity(const CyclicWord& v, int p,
                                        const Alphabet& ab);

ClassReport make_class_report(const CyclicWord& v, const Alphabet& ab);

}  // namespace turaev
