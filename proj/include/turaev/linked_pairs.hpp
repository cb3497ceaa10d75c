#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "turaev/words.hpp"

namespace turaev {

// Orientation of a letter tuple: +1 if some cyclic rotation is strictly
// increasing in the alphabet order, -1 if some rotation is strictly
// decreasing, 0 otherwise (in particular when two entries coincide).
int orientation_sign(std::span<const Letter> tuple, const Alphabet& ab);

enum class PairKind : std::uint8_t { type1 = 1, type2 = 2, type3 = 3 };

// One element of LP1: an ordered pair of equal-length subwords of the
// cyclic word, recorded by the index pair (i, j) of its frontier letters,
// its kind, the overlap length r (0 for type1), and its sign.
//
// Kinds, for a cyclically reduced representative v of length n:
//   type1: no overlap; the 4-tuple (bar v_{i-1}, bar v_{j-1}, v_i, v_j)
//          is oriented.  sign = orientation of (bar v_{i-1}, v_i, v_j).
//   type2: the r letters before i and before j agree (maximal r); the
//          tuples (bar v_{i-r-1}, bar v_{j-r-1}, v_{i-r}) and
//          (v_i, v_j, bar v_{i-1}) carry the same nonzero orientation,
//          which is the sign.
//   type3: the r letters before i are the inverse of the r letters from j
//          on (maximal r); the tuples (v_{j+r}, bar v_{i-r-1}, v_{i-r})
//          and (bar v_{i-1}, v_i, bar v_{j-1}) carry opposite nonzero
//          orientations; the sign is the first tuple's orientation.
//
// For type3 the overlap forces v_j = bar v_{i-1}, so the type1/type2 sign
// tuple (bar v_{i-1}, v_i, v_j) is degenerate there; the first divergence
// tuple carries the crossing orientation instead. This matches the
// geometric crossing count (see the fatgraph oracle in the test suite) and
// keeps partner signs antisymmetric.
struct LinkedPair {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  PairKind kind = PairKind::type1;
  std::uint32_t r = 0;
  int sign = 0;

  auto operator<=>(const LinkedPair&) const = default;
};

// LP1 of a cyclic word, enumerated on one fixed cyclically reduced
// representative. Pairs are sorted by (i, j); the map pair -> (i, j) is
// injective, so the sort order is strict.
struct LinkedPairSet {
  LinearWord rep;
  std::vector<LinkedPair> pairs;

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
  const LinkedPair* find(std::uint32_t i, std::uint32_t j) const;
};

// Enumerates LP1 on a cyclically reduced representative. O(n^2) index
// pairs, each with an O(n) maximal-overlap scan.
LinkedPairSet enumerate_linked_pairs(const LinearWord& rep,
                                     const Alphabet& ab);

// Enumerates LP1 on the canonical representative of v.
LinkedPairSet enumerate_linked_pairs(const CyclicWord& v, const Alphabet& ab);

// LP1 of the p-th power, by index translation: every pair (i, j) of V
// lifts to (i + t n, j + s n) for t, s in [0, p), keeping kind, overlap
// and sign. The result indexes into rep^p (the same rotation).
LinkedPairSet lift_to_power(const LinkedPairSet& lp, int p);

// The reversed pair (Q, P): (j, i) for type1/type2, (j+r, i-r) for type3.
// Throws invalid_input if pair is not in the set.
LinkedPair symmetry_partner(const LinkedPairSet& lp, const LinkedPair& pair);

}  // namespace turaev
