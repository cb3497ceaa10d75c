#include <doctest.h>

#include "turaev/surface.hpp"

using namespace turaev;

TEST_CASE("surface ranks") {
  CHECK(rank(Surface{0, 3}) == 2);
  CHECK(rank(Surface{1, 1}) == 2);
  CHECK(rank(Surface{1, 2}) == 3);
  CHECK(rank(Surface{0, 2}) == 1);
  CHECK(rank(Surface{2, 1}) == 4);
  CHECK_THROWS_AS(rank(Surface{1, 0}), invalid_input);   // closed
  CHECK_THROWS_AS(rank(Surface{0, 1}), invalid_input);   // disk, rank 0
}

TEST_CASE("default orders") {
  CHECK(default_order(Surface{0, 3}).order() == "abBA");
  CHECK(default_order(Surface{0, 2}).order() == "aA");
  CHECK(default_order(Surface{1, 1}).order() == "abAB");
  CHECK(default_order(Surface{1, 2}).order() == "abABcC");
  CHECK(default_order(Surface{0, 4}).order() == "abcCBA");
  CHECK(default_order(Surface{2, 1}).order() == "abABcdCD");

  for (Surface s : {Surface{0, 3}, Surface{1, 1}, Surface{1, 3},
                    Surface{2, 2}}) {
    Alphabet ab = default_order(s);
    CHECK(ab.q() == rank(s));  // 2q letters, each exactly once, by parsing
  }
}

TEST_CASE("surface parsing") {
  Surface s = Surface::parse("1,2");
  CHECK(s.genus == 1);
  CHECK(s.boundary == 2);
  CHECK(s.str() == "1,2");
  CHECK_THROWS_AS(Surface::parse("12"), invalid_input);
  CHECK_THROWS_AS(Surface::parse("1,x"), invalid_input);
  CHECK_THROWS_AS(Surface::parse("-1,2"), invalid_input);
}
