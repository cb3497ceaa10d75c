#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "turaev/alphabet.hpp"

namespace turaev {

// A finite sequence of letters. Not necessarily reduced; reducedness is a
// property checked by predicates, not a stored flag.
class LinearWord {
 public:
  LinearWord() = default;
  explicit LinearWord(std::vector<Letter> letters)
      : letters_(std::move(letters)) {}

  // Parses a word string, validating every letter against the alphabet.
  static LinearWord parse(std::string_view text, const Alphabet& ab);

  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter at(std::size_t i) const { return letters_[i]; }

  // Letter at position i mod length. Subword indices are always read mod
  // the length, so most callers want this accessor.
  Letter at_mod(std::ptrdiff_t i) const {
    auto n = static_cast<std::ptrdiff_t>(letters_.size());
    return letters_[static_cast<std::size_t>(((i % n) + n) % n)];
  }

  const std::vector<Letter>& letters() const { return letters_; }
  std::string str() const;

  auto operator<=>(const LinearWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

bool is_freely_reduced(const LinearWord& w);
bool is_cyclically_reduced(const LinearWord& w);

// Iterated cancellation of adjacent v v-bar pairs; the result is the unique
// freely reduced word in the same class. May be empty.
LinearWord reduce_linear(const LinearWord& w);

// Strips matched inverse prefix/suffix pairs. Requires w freely reduced.
LinearWord cyclic_reduce(const LinearWord& w);

// Letterwise bar of the reversal. Involutive.
LinearWord inverse(const LinearWord& w);

// p concatenated copies of a cyclically reduced nonempty word; the result
// is again cyclically reduced. p must be >= 1.
LinearWord power(const LinearWord& v, int p);

// V_{i,j}: the subword v_i ... v_{j-1}, read cyclically when i >= j.
// subword(v, i, i) is the full rotation V_i of length n.
LinearWord subword(const LinearWord& v, std::size_t i, std::size_t j);

// V_i = subword(v, i, i), the rotation starting at position i.
LinearWord rotation(const LinearWord& v, std::size_t i);

// A conjugacy class: rotation class of a cyclically reduced word, held by
// its canonical representative (the lexicographically least rotation under
// the alphabet order). The empty class is the zero element.
class CyclicWord {
 public:
  CyclicWord() = default;  // the zero class

  const LinearWord& canonical() const { return rep_; }
  std::size_t length() const { return rep_.length(); }
  bool is_zero() const { return rep_.empty(); }
  std::string str() const { return rep_.str(); }

  auto operator<=>(const CyclicWord&) const = default;

  // For values already known to be canonical (e.g. powers and periods of
  // canonical words). Not validated; library-internal use.
  static CyclicWord from_canonical(LinearWord canonical_rep) {
    CyclicWord v;
    v.rep_ = std::move(canonical_rep);
    return v;
  }

 private:
  LinearWord rep_;
};

// Fully reduces w and picks the least rotation under the alphabet order.
CyclicWord canonicalize(const LinearWord& w, const Alphabet& ab);

// Index of the least rotation of a nonempty word under the alphabet order
// (Booth-style two-pointer scan, O(n)).
std::size_t least_rotation_index(const LinearWord& w, const Alphabet& ab);

// (W, k) with v = W^k and W nonpower; k = 1 iff v is nonpower.
std::pair<CyclicWord, int> primitive_root(const CyclicWord& v);

// Power of a cyclic word; the power of a canonical word is canonical.
CyclicWord power(const CyclicWord& v, int p);

}  // namespace turaev
