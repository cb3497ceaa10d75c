#include "support/reference.hpp"

#include <array>
#include <stdexcept>

namespace turaev::reference {

namespace {

int sign3(const Alphabet& ab, Letter a, Letter b, Letter c) {
  std::array<Letter, 3> t{a, b, c};
  return orientation_sign(t, ab);
}

}  // namespace

LinkedPairSet enumerate_linked_pairs_bruteforce(const LinearWord& rep,
                                                const Alphabet& ab) {
  if (!is_cyclically_reduced(rep))
    throw invalid_input("bruteforce enumeration needs a cyclically reduced word");
  LinkedPairSet out;
  out.rep = rep;
  const LinearWord& v = rep;
  auto n = static_cast<std::ptrdiff_t>(v.length());

  for (std::ptrdiff_t i = 0; i < n; ++i) {
    for (std::ptrdiff_t j = 0; j < n; ++j) {
      std::vector<LinkedPair> found;

      // No overlap: the divergence 4-tuple is oriented.
      {
        std::array<Letter, 4> t4{bar(v.at_mod(i - 1)), bar(v.at_mod(j - 1)),
                                 v.at_mod(i), v.at_mod(j)};
        int s4 = orientation_sign(t4, ab);
        if (s4 != 0)
          found.push_back({static_cast<std::uint32_t>(i),
                           static_cast<std::uint32_t>(j), PairKind::type1, 0,
                           sign3(ab, bar(v.at_mod(i - 1)), v.at_mod(i),
                                 v.at_mod(j))});
      }

      // Same-direction overlap of each length r, conditions spelled out.
      for (std::ptrdiff_t r = 1; r <= n - 2; ++r) {
        bool match = true;
        for (std::ptrdiff_t t = 1; t <= r && match; ++t)
          match = v.at_mod(i - t) == v.at_mod(j - t);
        if (!match) continue;
        int back = sign3(ab, bar(v.at_mod(i - r - 1)), bar(v.at_mod(j - r - 1)),
                         v.at_mod(i - r));
        int front = sign3(ab, v.at_mod(i), v.at_mod(j), bar(v.at_mod(i - 1)));
        if (back != 0 && back == front)
          found.push_back({static_cast<std::uint32_t>(i),
                           static_cast<std::uint32_t>(j), PairKind::type2,
                           static_cast<std::uint32_t>(r), front});
      }

      // Opposite-direction overlap: divergence tuples must disagree.
      for (std::ptrdiff_t r = 1; r <= n - 2; ++r) {
        bool match = true;
        for (std::ptrdiff_t t = 1; t <= r && match; ++t)
          match = v.at_mod(i - t) == bar(v.at_mod(j + t - 1));
        if (!match) continue;
        int start = sign3(ab, v.at_mod(j + r), bar(v.at_mod(i - r - 1)),
                          v.at_mod(i - r));
        int end = sign3(ab, bar(v.at_mod(i - 1)), v.at_mod(i),
                        bar(v.at_mod(j - 1)));
        if (start != 0 && end != 0 && start == -end)
          found.push_back({static_cast<std::uint32_t>(i),
                           static_cast<std::uint32_t>(j), PairKind::type3,
                           static_cast<std::uint32_t>(r), start});
      }

      if (found.size() > 1)
        throw std::logic_error("injectivity failure at (" +
                               std::to_string(i) + "," + std::to_string(j) +
                               ") of " + rep.str());
      if (!found.empty()) out.pairs.push_back(found.front());
    }
  }
  return out;
}

CyclicWord canonicalize_bruteforce(const LinearWord& w, const Alphabet& ab) {
  LinearWord r = cyclic_reduce(reduce_linear(w));
  if (r.empty()) return CyclicWord{};
  auto less = [&](const LinearWord& a, const LinearWord& b) {
    for (std::size_t t = 0; t < a.length(); ++t) {
      if (ab.rank(a.at(t)) != ab.rank(b.at(t)))
        return ab.rank(a.at(t)) < ab.rank(b.at(t));
    }
    return false;
  };
  LinearWord best = r;
  for (std::size_t k = 1; k < r.length(); ++k) {
    LinearWord rot = rotation(r, k);
    if (less(rot, best)) best = rot;
  }
  return CyclicWord::from_canonical(std::move(best));
}

std::pair<CyclicWord, int> primitive_root_bruteforce(const CyclicWord& v) {
  const LinearWord& w = v.canonical();
  std::size_t n = w.length();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t t = d; t < n && periodic; ++t)
      periodic = w.at(t) == w.at(t - d);
    if (periodic) {
      LinearWord root(std::vector<Letter>(
          w.letters().begin(),
          w.letters().begin() + static_cast<std::ptrdiff_t>(d)));
      return {CyclicWord::from_canonical(std::move(root)),
              static_cast<int>(n / d)};
    }
  }
  throw std::logic_error("unreachable: every word has period n");
}

}  // namespace turaev::reference
