#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace turaev {

// Thrown on malformed user input (bad letters, bad orders, out-of-range
// arguments). The CLI maps it to exit code 1.
struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A letter of the alphabet: generator g is encoded as 2g, its inverse as
// 2g+1, so the bar involution is a single bit flip and needs no table.
using Letter = std::uint8_t;

constexpr Letter bar(Letter v) { return static_cast<Letter>(v ^ 1u); }
constexpr bool is_inverse_letter(Letter v) { return (v & 1u) != 0; }
constexpr int generator_of(Letter v) { return v >> 1; }

// Text encoding: generator i is 'a'+i, its inverse the matching uppercase.
char letter_to_char(Letter v);
Letter letter_from_char(char c);  // throws invalid_input on non-letters

constexpr int kMaxGenerators = 26;

// The 2q letters together with the fixed linear order the cobracket
// machinery compares against. The order is explicit data, supplied as a
// string listing every letter exactly once, e.g. "abBA" meaning
// a < b < b-bar < a-bar. It is never inferred.
class Alphabet {
 public:
  // Parses and validates an order string; q is inferred from its length.
  static Alphabet from_order(std::string_view order);

  int q() const { return q_; }
  int size() const { return 2 * q_; }
  bool contains(Letter v) const { return v < rank_.size(); }

  // Position of a letter in the fixed linear order, 0-based.
  int rank(Letter v) const { return rank_[v]; }
  Letter letter_at_rank(int r) const { return by_rank_[r]; }

  const std::string& order() const { return order_; }

  bool operator==(const Alphabet&) const = default;

 private:
  Alphabet() = default;

  int q_ = 0;
  std::string order_;
  std::vector<std::uint8_t> rank_;    // indexed by Letter
  std::vector<Letter> by_rank_;
};

}  // namespace turaev
