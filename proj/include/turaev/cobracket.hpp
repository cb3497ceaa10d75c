#pragma once

#include "turaev/linked_pairs.hpp"
#include "turaev/tensor.hpp"

namespace turaev {

// The cobracket of a cyclic word: the signed sum over LP1 of the
// ordered pairs of loop classes cut out at each linked pair,
//   sum sign(i,j) * class(V_{i,j}) (x) class(V_{j,i}).
// The zero class maps to the zero element.
TensorElement cobracket(const CyclicWord& v, const Alphabet& ab);

// Same, evaluated on a chosen cyclically reduced representative.
TensorElement cobracket(const LinearWord& rep, const Alphabet& ab);

// The cobracket of v^p evaluated in closed form from LP1(v) alone:
//   p * sum over (i,j) in LP1(v), 0 <= s <= p-1 of
//       sign(i,j) * class(V_i^s V_{i,j}) (x) class(V_j^{p-s-1} V_{j,i}).
// Agrees term-for-term with cobracket applied to the expanded word v^p.
TensorElement cobracket_power(const LinearWord& rep, int p,
                              const Alphabet& ab);
TensorElement cobracket_power(const CyclicWord& v, int p, const Alphabet& ab);

// Co-Jacobi identity: (Id + omega + omega^2)(Id (x) delta) delta (v) == 0.
bool check_cojacobi(const CyclicWord& v, const Alphabet& ab);

}  // namespace turaev
