#pragma once

#include <functional>
#include <vector>

#include "turaev/words.hpp"

namespace turaev {

// All canonical cyclically reduced words of length 1..max_len over the
// alphabet, in (length, canonical form) order: one representative per
// cyclic class, powers included. Deterministic.
std::vector<CyclicWord> enumerate_canonical_words(const Alphabet& ab,
                                                  std::size_t max_len);

// Streaming variant: calls fn for each canonical word in the same order.
void for_each_canonical_word(const Alphabet& ab, std::size_t max_len,
                             const std::function<void(const CyclicWord&)>& fn);

}  // namespace turaev
