#include <doctest.h>

#include <array>

#include "support/reference.hpp"
#include "turaev/enumerate.hpp"
#include "turaev/linked_pairs.hpp"

using namespace turaev;

namespace {

const Alphabet kPants = Alphabet::from_order("abBA");
const Alphabet kTorus = Alphabet::from_order("abAB");

LinearWord w(const std::string& text, const Alphabet& ab = kPants) {
  return LinearWord::parse(text, ab);
}

int sign3(const Alphabet& ab, const char* s) {
  std::array<Letter, 3> t{letter_from_char(s[0]), letter_from_char(s[1]),
                          letter_from_char(s[2])};
  return orientation_sign(t, ab);
}

int sign4(const Alphabet& ab, const char* s) {
  std::array<Letter, 4> t{letter_from_char(s[0]), letter_from_char(s[1]),
                          letter_from_char(s[2]), letter_from_char(s[3])};
  return orientation_sign(t, ab);
}

}  // namespace

TEST_CASE("orientation signs") {
  CHECK(sign3(kPants, "abA") == 1);   // a < b < a-bar, already increasing
  CHECK(sign3(kPants, "aab") == 0);   // repeated letter
  CHECK(sign3(kPants, "Aba") == -1);  // strictly decreasing
  // Three distinct letters are always cyclically monotone one way: the
  // sign is zero exactly when two entries coincide.
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int z = 0; z < 4; ++z) {
        std::array<Letter, 3> t{kPants.letter_at_rank(x),
                                kPants.letter_at_rank(y),
                                kPants.letter_at_rank(z)};
        int s = orientation_sign(t, kPants);
        bool distinct = x != y && y != z && x != z;
        CHECK((s != 0) == distinct);
      }

  CHECK(sign4(kPants, "BAab") == 1);   // the divergence tuple of the pair (0,1) below
  CHECK(sign4(kPants, "aBbA") == 0);   // distinct but not cyclically monotone
  CHECK(sign4(kPants, "ABba") == -1);

  // Rotating the alphabet order only rotates the comparison circle.
  Alphabet rotated = Alphabet::from_order("bBAa");
  for (const char* tup : {"abA", "Aba", "bBA", "aAB"})
    CHECK(sign3(kPants, tup) == sign3(rotated, tup));
}

TEST_CASE("linked pairs of the running example") {
  LinkedPairSet lp = enumerate_linked_pairs(w("abaabab"), kPants);
  CHECK(lp.size() == 24);

  const LinkedPair* p01 = lp.find(0, 1);
  REQUIRE(p01 != nullptr);
  CHECK(p01->kind == PairKind::type1);
  CHECK(p01->sign == 1);
  const LinkedPair* p56 = lp.find(5, 6);
  REQUIRE(p56 != nullptr);
  CHECK(p56->kind == PairKind::type1);
  CHECK(p56->sign == 1);

  // Frozen from the exhaustive triple-loop oracle.
  LinkedPairSet want = reference::enumerate_linked_pairs_bruteforce(
      w("abaabab"), kPants);
  CHECK(lp.pairs == want.pairs);
  using K = PairKind;
  std::vector<LinkedPair> frozen = {
      {0, 1, K::type1, 0, 1},  {0, 4, K::type1, 0, 1},
      {0, 6, K::type1, 0, 1},  {1, 0, K::type1, 0, -1},
      {1, 2, K::type1, 0, -1}, {1, 3, K::type2, 5, -1},
      {1, 5, K::type1, 0, -1}, {2, 1, K::type1, 0, 1},
      {2, 4, K::type1, 0, 1},  {2, 6, K::type1, 0, 1},
      {3, 1, K::type2, 5, 1},  {3, 4, K::type2, 1, 1},
      {3, 6, K::type2, 3, 1},  {4, 0, K::type1, 0, -1},
      {4, 2, K::type1, 0, -1}, {4, 3, K::type2, 1, -1},
      {4, 5, K::type1, 0, -1}, {5, 1, K::type1, 0, 1},
      {5, 4, K::type1, 0, 1},  {5, 6, K::type1, 0, 1},
      {6, 0, K::type1, 0, -1}, {6, 2, K::type1, 0, -1},
      {6, 3, K::type2, 3, -1}, {6, 5, K::type1, 0, -1}};
  CHECK(lp.pairs == frozen);
}

TEST_CASE("degenerate and tiny words") {
  CHECK(enumerate_linked_pairs(w("a"), kPants).empty());
  CHECK(enumerate_linked_pairs(w("aaaaa"), kPants).empty());
  CHECK(enumerate_linked_pairs(CyclicWord{}, kPants).empty());
  CHECK_THROWS_AS(enumerate_linked_pairs(w("aAb"), kPants), invalid_input);
}

TEST_CASE("opposite-direction overlaps") {
  // The commutator word on the pants order carries four opposite-overlap
  // pairs; frozen from the oracle.
  LinkedPairSet lp = enumerate_linked_pairs(w("abAB"), kPants);
  CHECK(lp.size() == 6);
  using K = PairKind;
  std::vector<LinkedPair> frozen = {
      {0, 1, K::type3, 1, 1}, {1, 2, K::type3, 1, -1},
      {1, 3, K::type1, 0, 1}, {2, 3, K::type3, 1, -1},
      {3, 0, K::type3, 1, 1}, {3, 1, K::type1, 0, -1}};
  CHECK(lp.pairs == frozen);

  // The same word under the interleaved order is a boundary class: no
  // pairs at all.
  CHECK(enumerate_linked_pairs(w("abAB", kTorus), kTorus).empty());
}

TEST_CASE("enumeration matches the literal oracle over the corpus") {
  for (const Alphabet& ab : {kPants, kTorus}) {
    std::size_t words = 0;
    for_each_canonical_word(ab, 7, [&](const CyclicWord& v) {
      LinkedPairSet fast = enumerate_linked_pairs(v, ab);
      LinkedPairSet slow =
          reference::enumerate_linked_pairs_bruteforce(v.canonical(), ab);
      CHECK(fast.pairs == slow.pairs);
      ++words;
    });
    CHECK(words == 550);
  }
}

TEST_CASE("frontier letters and parity") {
  for (const Alphabet& ab : {kPants, kTorus}) {
    for_each_canonical_word(ab, 7, [&](const CyclicWord& v) {
      const LinearWord& rep = v.canonical();
      LinkedPairSet lp = enumerate_linked_pairs(rep, ab);
      for (const LinkedPair& p : lp.pairs) {
        CHECK(p.i != p.j);
        CHECK(rep.at(p.i) != rep.at(p.j));
        CHECK(bar(rep.at(p.i)) !=
              rep.at_mod(static_cast<std::ptrdiff_t>(p.j) - 1));
        CHECK((p.sign == 1 || p.sign == -1));
      }
      if (primitive_root(v).second == 1) CHECK(lp.size() % 2 == 0);
    });
  }
}

TEST_CASE("partner symmetry") {
  // Direct example first: the reversal of a no-overlap pair.
  LinkedPairSet lp = enumerate_linked_pairs(w("abaabab"), kPants);
  LinkedPair p01 = *lp.find(0, 1);
  LinkedPair q = symmetry_partner(lp, p01);
  CHECK(q.i == 1);
  CHECK(q.j == 0);
  CHECK(q.sign == -1);
  CHECK(symmetry_partner(lp, q) == p01);

  LinkedPair fake = p01;
  fake.j = 2;  // (0,2) is not linked: v_0 = v_2 = a
  CHECK_THROWS_AS(symmetry_partner(lp, fake), invalid_input);
  LinkedPair tampered = *lp.find(2, 1);
  tampered.sign = -tampered.sign;  // right indices, wrong record
  CHECK_THROWS_AS(symmetry_partner(lp, tampered), invalid_input);

  // Involution and the reversed-pair criterion over the corpus.
  for (const Alphabet& ab : {kPants, kTorus}) {
    for_each_canonical_word(ab, 8, [&](const CyclicWord& v) {
      LinkedPairSet set = enumerate_linked_pairs(v, ab);
      for (const LinkedPair& p : set.pairs) {
        LinkedPair partner = symmetry_partner(set, p);
        CHECK(partner.kind == p.kind);
        CHECK(partner.r == p.r);
        CHECK(partner.sign == -p.sign);
        CHECK(symmetry_partner(set, partner) == p);
        bool ji = set.find(p.j, p.i) != nullptr;
        CHECK(ji == (p.kind != PairKind::type3));
        CHECK(is_cyclically_reduced(subword(set.rep, p.j, p.i)) ==
              (p.kind != PairKind::type3));
      }
    });
  }
}

TEST_CASE("lifting to powers") {
  CHECK(lift_to_power(LinkedPairSet{}, 3).pairs.empty());

  LinkedPairSet lp = enumerate_linked_pairs(w("abaabab"), kPants);
  LinkedPairSet lifted = lift_to_power(lp, 2);
  CHECK(lifted.size() == 4 * lp.size());
  for (auto [i, j] : {std::pair{0u, 1u}, {0u, 8u}, {7u, 1u}, {7u, 8u}}) {
    const LinkedPair* p = lifted.find(i, j);
    REQUIRE(p != nullptr);
    CHECK(p->kind == PairKind::type1);
    CHECK(p->sign == 1);
  }

  // Lifted sets equal direct enumeration on the same rotation of v^p.
  for (const Alphabet& ab : {kPants, kTorus}) {
    for_each_canonical_word(ab, 6, [&](const CyclicWord& v) {
      LinkedPairSet base = enumerate_linked_pairs(v, ab);
      for (int p : {2, 3, 4}) {
        LinkedPairSet via_lift = lift_to_power(base, p);
        LinkedPairSet direct =
            enumerate_linked_pairs(power(v.canonical(), p), ab);
        CHECK(via_lift.pairs == direct.pairs);
        CHECK(via_lift.rep == direct.rep);
      }
    });
  }
}
