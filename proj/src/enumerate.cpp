#include "turaev/enumerate.hpp"

namespace turaev {

namespace {

// DFS over letter choices in rank order, so output is lexicographic in the
// alphabet order within each length.
void emit_words(const Alphabet& ab, std::size_t len,
                const std::function<void(const CyclicWord&)>& fn) {
  std::vector<Letter> buf(len);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == len) {
      if (len >= 2 && buf[len - 1] == bar(buf[0])) return;
      LinearWord w{std::vector<Letter>(buf)};
      if (least_rotation_index(w, ab) != 0) return;  // not canonical
      fn(CyclicWord::from_canonical(std::move(w)));
      return;
    }
    for (int r = 0; r < ab.size(); ++r) {
      Letter v = ab.letter_at_rank(r);
      if (pos > 0 && buf[pos - 1] == bar(v)) continue;
      buf[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

void for_each_canonical_word(
    const Alphabet& ab, std::size_t max_len,
    const std::function<void(const CyclicWord&)>& fn) {
  for (std::size_t len = 1; len <= max_len; ++len) emit_words(ab, len, fn);
}

std::vector<CyclicWord> enumerate_canonical_words(const Alphabet& ab,
                                                  std::size_t max_len) {
  std::vector<CyclicWord> out;
  for_each_canonical_word(ab, max_len,
                          [&](const CyclicWord& w) { out.push_back(w); });
  return out;
}

}  // namespace turaev
