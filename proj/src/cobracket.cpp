#include "turaev/cobracket.hpp"

#include <cassert>

namespace turaev {

namespace {

// V_i^s V_{i,j} as a linear word; cyclically reduced by construction
// since V is and v_i != bar(v_{j-1}).
LinearWord repeated_rotation_then_subword(const LinearWord& v, std::size_t i,
                                          std::size_t j, int s) {
  std::vector<Letter> out;
  std::size_t n = v.length();
  std::size_t tail = (i == j) ? n : (j + n - i) % n;
  out.reserve(static_cast<std::size_t>(s) * n + tail);
  for (int k = 0; k < s; ++k)
    for (std::size_t t = 0; t < n; ++t) out.push_back(v.at((i + t) % n));
  for (std::size_t t = 0; t < tail; ++t) out.push_back(v.at((i + t) % n));
  return LinearWord(std::move(out));
}

}  // namespace

TensorElement cobracket(const LinearWord& rep, const Alphabet& ab) {
  TensorElement out;
  LinkedPairSet lp = enumerate_linked_pairs(rep, ab);
  for (const LinkedPair& p : lp.pairs) {
    CyclicWord left = canonicalize(subword(rep, p.i, p.j), ab);
    CyclicWord right = canonicalize(subword(rep, p.j, p.i), ab);
    assert(!left.is_zero() && !right.is_zero());
    out.add(left, right, p.sign);
  }
  return out;
}

TensorElement cobracket(const CyclicWord& v, const Alphabet& ab) {
  if (v.is_zero()) return TensorElement{};
  return cobracket(v.canonical(), ab);
}

TensorElement cobracket_power(const LinearWord& rep, int p,
                              const Alphabet& ab) {
  if (p < 1)
    throw invalid_input("cobracket_power exponent must be >= 1, got " +
                        std::to_string(p));
  TensorElement out;
  LinkedPairSet lp = enumerate_linked_pairs(rep, ab);
  for (const LinkedPair& q : lp.pairs) {
    for (int s = 0; s < p; ++s) {
      CyclicWord left = canonicalize(
          repeated_rotation_then_subword(rep, q.i, q.j, s), ab);
      CyclicWord right = canonicalize(
          repeated_rotation_then_subword(rep, q.j, q.i, p - s - 1), ab);
      assert(!left.is_zero() && !right.is_zero());
      out.add(left, right, static_cast<TensorElement::Coeff>(p) * q.sign);
    }
  }
  return out;
}

TensorElement cobracket_power(const CyclicWord& v, int p, const Alphabet& ab) {
  if (p < 1)
    throw invalid_input("cobracket_power exponent must be >= 1, got " +
                        std::to_string(p));
  if (v.is_zero()) return TensorElement{};
  return cobracket_power(v.canonical(), p, ab);
}

bool check_cojacobi(const CyclicWord& v, const Alphabet& ab) {
  TensorElement d = cobracket(v, ab);
  TripleTensor t;
  for (const auto& [k, c] : d.terms()) {
    TensorElement inner = cobracket(k.second, ab);
    for (const auto& [k2, c2] : inner.terms())
      t.add(k.first, k2.first, k2.second, c * c2);
  }
  TripleTensor w1 = t.cycled();
  TripleTensor w2 = w1.cycled();
  TripleTensor sum;
  for (const TripleTensor* part : {&t, &w1, &w2})
    for (const auto& [k, c] : part->terms())
      sum.add(std::get<0>(k), std::get<1>(k), std::get<2>(k), c);
  return sum.is_zero();
}

}  // namespace turaev
