#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <utility>

#include "turaev/words.hpp"

namespace turaev {

// A finite integer combination of ordered pairs of nonempty cyclic words.
// Keys are canonical; zero coefficients are never stored; terms with an
// empty factor are dropped (the empty class is the zero element).
class TensorElement {
 public:
  using Key = std::pair<CyclicWord, CyclicWord>;
  using Coeff = long long;

  void add(const CyclicWord& left, const CyclicWord& right, Coeff c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Coeff coeff(const CyclicWord& left, const CyclicWord& right) const;
  const std::map<Key, Coeff>& terms() const { return terms_; }

  // Image under the factor swap x (x) y -> y (x) x.
  TensorElement swapped() const;
  TensorElement negated() const;

  bool operator==(const TensorElement&) const = default;

 private:
  std::map<Key, Coeff> terms_;
};

// Sum of absolute values of the coefficients in the combined basis.
long long manhattan_norm(const TensorElement& x);

// True iff swapping both factors of every term and negating reproduces x.
bool check_coskew(const TensorElement& x);

// Transient triple-tensor used by the co-Jacobi checker.
class TripleTensor {
 public:
  using Key = std::tuple<CyclicWord, CyclicWord, CyclicWord>;
  using Coeff = long long;

  void add(const CyclicWord& a, const CyclicWord& b, const CyclicWord& c,
           Coeff coeff);
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Coeff>& terms() const { return terms_; }

  // omega: u (x) v (x) w -> w (x) u (x) v, applied k times.
  TripleTensor cycled() const;

 private:
  std::map<Key, Coeff> terms_;
};

}  // namespace turaev
