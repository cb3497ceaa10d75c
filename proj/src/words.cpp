#include "turaev/words.hpp"

#include <algorithm>

namespace turaev {

LinearWord LinearWord::parse(std::string_view text, const Alphabet& ab) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    Letter v = letter_from_char(c);
    if (!ab.contains(v))
      throw invalid_input(std::string("letter '") + c +
                          "' is outside the alphabet of order \"" +
                          ab.order() + "\"");
    letters.push_back(v);
  }
  return LinearWord(std::move(letters));
}

std::string LinearWord::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter v : letters_) s.push_back(letter_to_char(v));
  return s;
}

bool is_freely_reduced(const LinearWord& w) {
  for (std::size_t i = 0; i + 1 < w.length(); ++i)
    if (w.at(i) == bar(w.at(i + 1))) return false;
  return true;
}

bool is_cyclically_reduced(const LinearWord& w) {
  if (!is_freely_reduced(w)) return false;
  if (w.length() >= 2 && w.at(w.length() - 1) == bar(w.at(0))) return false;
  return true;
}

LinearWord reduce_linear(const LinearWord& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (Letter v : w.letters()) {
    if (!out.empty() && out.back() == bar(v))
      out.pop_back();
    else
      out.push_back(v);
  }
  return LinearWord(std::move(out));
}

LinearWord cyclic_reduce(const LinearWord& w) {
  if (!is_freely_reduced(w))
    throw invalid_input("cyclic_reduce requires a freely reduced word");
  std::size_t lo = 0, hi = w.length();
  while (hi - lo >= 2 && w.at(lo) == bar(w.at(hi - 1))) {
    ++lo;
    --hi;
  }
  return LinearWord(
      std::vector<Letter>(w.letters().begin() + static_cast<std::ptrdiff_t>(lo),
                          w.letters().begin() + static_cast<std::ptrdiff_t>(hi)));
}

LinearWord inverse(const LinearWord& w) {
  std::vector<Letter> out(w.length());
  for (std::size_t i = 0; i < w.length(); ++i)
    out[w.length() - 1 - i] = bar(w.at(i));
  return LinearWord(std::move(out));
}

LinearWord power(const LinearWord& v, int p) {
  if (p < 1) throw invalid_input("power exponent must be >= 1, got " +
                                 std::to_string(p));
  if (!is_cyclically_reduced(v))
    throw invalid_input("power requires a cyclically reduced word");
  std::vector<Letter> out;
  out.reserve(v.length() * static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k)
    out.insert(out.end(), v.letters().begin(), v.letters().end());
  return LinearWord(std::move(out));
}

LinearWord subword(const LinearWord& v, std::size_t i, std::size_t j) {
  std::size_t n = v.length();
  if (i >= n || j >= n)
    throw invalid_input("subword index out of range");
  std::vector<Letter> out;
  std::size_t len = (i == j) ? n : (j + n - i) % n;
  out.reserve(len);
  for (std::size_t t = 0; t < len; ++t) out.push_back(v.at((i + t) % n));
  return LinearWord(std::move(out));
}

LinearWord rotation(const LinearWord& v, std::size_t i) {
  return subword(v, i, i);
}

std::size_t least_rotation_index(const LinearWord& w, const Alphabet& ab) {
  std::size_t n = w.length();
  // Two-pointer tournament: i and j race as candidate start positions,
  // k is the current matched prefix length.
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    int a = ab.rank(w.at((i + k) % n));
    int b = ab.rank(w.at((j + k) % n));
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

CyclicWord canonicalize(const LinearWord& w, const Alphabet& ab) {
  LinearWord r = cyclic_reduce(reduce_linear(w));
  if (r.empty()) return CyclicWord{};
  return CyclicWord::from_canonical(rotation(r, least_rotation_index(r, ab)));
}

std::pair<CyclicWord, int> primitive_root(const CyclicWord& v) {
  if (v.is_zero())
    throw invalid_input("primitive_root of the zero class is undefined");
  const LinearWord& w = v.canonical();
  std::size_t n = w.length();
  // Smallest period via the KMP failure function; it determines the root
  // exactly when it divides n.
  std::vector<std::size_t> fail(n + 1, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = fail[i];
    while (k > 0 && w.at(i) != w.at(k)) k = fail[k];
    fail[i + 1] = (w.at(i) == w.at(k)) ? k + 1 : 0;
  }
  std::size_t d = n - fail[n];
  if (n % d != 0) d = n;
  LinearWord root(std::vector<Letter>(w.letters().begin(),
                                      w.letters().begin() +
                                          static_cast<std::ptrdiff_t>(d)));
  // The period of a least rotation is itself a least rotation, so the root
  // representative is already canonical.
  return {CyclicWord::from_canonical(std::move(root)),
          static_cast<int>(n / d)};
}

CyclicWord power(const CyclicWord& v, int p) {
  if (p < 1) throw invalid_input("power exponent must be >= 1, got " +
                                 std::to_string(p));
  if (v.is_zero()) return v;
  return CyclicWord::from_canonical(power(v.canonical(), p));
}

}  // namespace turaev
