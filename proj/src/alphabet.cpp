#include "turaev/alphabet.hpp"

#include <algorithm>

namespace turaev {

char letter_to_char(Letter v) {
  int g = generator_of(v);
  return static_cast<char>((is_inverse_letter(v) ? 'A' : 'a') + g);
}

Letter letter_from_char(char c) {
  if (c >= 'a' && c <= 'z') return static_cast<Letter>(2 * (c - 'a'));
  if (c >= 'A' && c <= 'Z') return static_cast<Letter>(2 * (c - 'A') + 1);
  throw invalid_input(std::string("invalid letter '") + c +
                      "': expected a-z or A-Z");
}

Alphabet Alphabet::from_order(std::string_view order) {
  if (order.empty() || order.size() % 2 != 0)
    throw invalid_input("order \"" + std::string(order) +
                        "\" must list all 2q letters");
  int q = static_cast<int>(order.size() / 2);
  if (q > kMaxGenerators)
    throw invalid_input("order lists more than 26 generators");

  Alphabet ab;
  ab.q_ = q;
  ab.order_ = std::string(order);
  ab.rank_.assign(2 * q, 0xff);
  ab.by_rank_.resize(2 * q);
  for (int r = 0; r < 2 * q; ++r) {
    Letter v = letter_from_char(order[r]);
    if (generator_of(v) >= q)
      throw invalid_input(std::string("order letter '") + order[r] +
                          "' is outside the rank-" + std::to_string(q) +
                          " alphabet");
    if (ab.rank_[v] != 0xff)
      throw invalid_input(std::string("order letter '") + order[r] +
                          "' appears twice");
    ab.rank_[v] = static_cast<std::uint8_t>(r);
    ab.by_rank_[r] = v;
  }
  // Every slot filled means every generator and inverse occurs exactly once.
  return ab;
}

}  // namespace turaev
