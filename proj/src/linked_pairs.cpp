#include "turaev/linked_pairs.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace turaev {

int orientation_sign(std::span<const Letter> tuple, const Alphabet& ab) {
  std::size_t n = tuple.size();
  if (n < 3) throw invalid_input("orientation_sign needs at least 3 letters");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (tuple[i] == tuple[j]) return 0;
  // With distinct entries, a strictly increasing rotation exists iff the
  // cyclic sequence of ranks has exactly one descent; strictly decreasing
  // iff it has exactly one ascent.
  std::size_t descents = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (ab.rank(tuple[i]) > ab.rank(tuple[(i + 1) % n])) ++descents;
  if (descents == 1) return 1;
  if (descents == n - 1) return -1;
  return 0;
}

const LinkedPair* LinkedPairSet::find(std::uint32_t i, std::uint32_t j) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), std::pair{i, j},
                             [](const LinkedPair& p, const std::pair<std::uint32_t, std::uint32_t>& k) {
                               return std::pair{p.i, p.j} < k;
                             });
  if (it != pairs.end() && it->i == i && it->j == j) return &*it;
  return nullptr;
}

namespace {

// Maximal r <= cap with v_{i-t} == v_{j-t} for t = 1..r.
std::size_t backward_match(const LinearWord& v, std::size_t i, std::size_t j,
                           std::size_t cap) {
  std::size_t r = 0;
  while (r < cap && v.at_mod(static_cast<std::ptrdiff_t>(i) - 1 -
                             static_cast<std::ptrdiff_t>(r)) ==
                        v.at_mod(static_cast<std::ptrdiff_t>(j) - 1 -
                                 static_cast<std::ptrdiff_t>(r)))
    ++r;
  return r;
}

// Maximal r <= cap with v_{i-t} == bar(v_{j+t-1}) for t = 1..r.
std::size_t inverse_match(const LinearWord& v, std::size_t i, std::size_t j,
                          std::size_t cap) {
  std::size_t r = 0;
  while (r < cap && v.at_mod(static_cast<std::ptrdiff_t>(i) - 1 -
                             static_cast<std::ptrdiff_t>(r)) ==
                        bar(v.at_mod(static_cast<std::ptrdiff_t>(j) +
                                     static_cast<std::ptrdiff_t>(r))))
    ++r;
  return r;
}

}  // namespace

LinkedPairSet enumerate_linked_pairs(const LinearWord& rep,
                                     const Alphabet& ab) {
  if (!is_cyclically_reduced(rep))
    throw invalid_input("linked pairs require a cyclically reduced word");
  LinkedPairSet out;
  out.rep = rep;
  const LinearWord& v = rep;
  std::size_t n = v.length();
  if (n == 0) return out;

  auto sign3 = [&](Letter a, Letter b, Letter c) {
    std::array<Letter, 3> t{a, b, c};
    return orientation_sign(t, ab);
  };
  auto at = [&](std::ptrdiff_t t) { return v.at_mod(t); };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      auto si = static_cast<std::ptrdiff_t>(i);
      auto sj = static_cast<std::ptrdiff_t>(j);

      // Same-direction overlap. Only the maximal match can satisfy the
      // frontier tuples (a shorter one repeats a letter and zeroes out),
      // and a match of n-1 or more never closes up on a reduced word.
      std::size_t r2 = backward_match(v, i, j, n - 1);
      if (r2 == 0) {
        std::array<Letter, 4> t4{bar(at(si - 1)), bar(at(sj - 1)), at(si),
                                 at(sj)};
        int s4 = orientation_sign(t4, ab);
        if (s4 != 0) {
          int sg = sign3(bar(at(si - 1)), at(si), at(sj));
          assert(sg == s4);  // a 3-subtuple of an oriented 4-tuple
          out.pairs.push_back({static_cast<std::uint32_t>(i),
                               static_cast<std::uint32_t>(j),
                               PairKind::type1, 0, sg});
          continue;
        }
      } else if (r2 <= n - 2) {
        auto sr = static_cast<std::ptrdiff_t>(r2);
        int back = sign3(bar(at(si - sr - 1)), bar(at(sj - sr - 1)),
                         at(si - sr));
        int front = sign3(at(si), at(sj), bar(at(si - 1)));
        if (back != 0 && back == front) {
          out.pairs.push_back({static_cast<std::uint32_t>(i),
                               static_cast<std::uint32_t>(j),
                               PairKind::type2,
                               static_cast<std::uint32_t>(r2), front});
          continue;
        }
      }

      // Opposite-direction overlap: the strands run antiparallel along
      // the common strip, so they cross exactly when the two divergence
      // tuples disagree.
      std::size_t r3 = inverse_match(v, i, j, n - 1);
      if (r3 >= 1 && r3 <= n - 2) {
        auto sr = static_cast<std::ptrdiff_t>(r3);
        int start = sign3(at(sj + sr), bar(at(si - sr - 1)), at(si - sr));
        int end = sign3(bar(at(si - 1)), at(si), bar(at(sj - 1)));
        if (start != 0 && end != 0 && start == -end) {
          out.pairs.push_back({static_cast<std::uint32_t>(i),
                               static_cast<std::uint32_t>(j),
                               PairKind::type3,
                               static_cast<std::uint32_t>(r3), start});
        }
      }
    }
  }
  // The (i, j) loop emits in sorted order already.
  return out;
}

LinkedPairSet enumerate_linked_pairs(const CyclicWord& v, const Alphabet& ab) {
  if (v.is_zero()) return LinkedPairSet{};
  return enumerate_linked_pairs(v.canonical(), ab);
}

LinkedPairSet lift_to_power(const LinkedPairSet& lp, int p) {
  if (p < 1) throw invalid_input("lift_to_power exponent must be >= 1");
  LinkedPairSet out;
  if (lp.rep.empty()) return out;
  out.rep = power(lp.rep, p);
  auto n = static_cast<std::uint32_t>(lp.rep.length());
  out.pairs.reserve(lp.pairs.size() * static_cast<std::size_t>(p) *
                    static_cast<std::size_t>(p));
  for (const LinkedPair& q : lp.pairs)
    for (int t = 0; t < p; ++t)
      for (int s = 0; s < p; ++s)
        out.pairs.push_back({q.i + static_cast<std::uint32_t>(t) * n,
                             q.j + static_cast<std::uint32_t>(s) * n, q.kind,
                             q.r, q.sign});
  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const LinkedPair& a, const LinkedPair& b) {
              return std::pair{a.i, a.j} < std::pair{b.i, b.j};
            });
  return out;
}

LinkedPair symmetry_partner(const LinkedPairSet& lp, const LinkedPair& pair) {
  const LinkedPair* self = lp.find(pair.i, pair.j);
  if (self == nullptr || *self != pair)
    throw invalid_input("symmetry_partner: pair is not in the set");
  auto n = static_cast<std::uint32_t>(lp.rep.length());
  std::uint32_t pi, pj;
  if (pair.kind == PairKind::type3) {
    pi = (pair.j + pair.r) % n;
    pj = (pair.i + n - pair.r) % n;
  } else {
    pi = pair.j;
    pj = pair.i;
  }
  const LinkedPair* partner = lp.find(pi, pj);
  if (partner == nullptr)
    throw invalid_input("symmetry_partner: partner missing from the set");
  return *partner;
}

}  // namespace turaev
