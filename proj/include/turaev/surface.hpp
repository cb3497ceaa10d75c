#pragma once

#include <string>
#include <string_view>

#include "turaev/alphabet.hpp"

namespace turaev {

// An oriented surface with boundary, by genus and boundary count. The
// fundamental group is free of rank 2g + b - 1 when b >= 1; closed
// surfaces are unsupported.
struct Surface {
  int genus = 0;
  int boundary = 1;

  static Surface parse(std::string_view text);  // "g,b"
  std::string str() const;
};

// 2g + b - 1. Throws invalid_input when b = 0 or the rank is not positive.
int rank(const Surface& s);

// A default alphabet order for the surface. Only the pair of pants order
// "abBA" is canonical data; every other default is a documented convention
// (planar surfaces: generators ascending then inverses descending; each
// handle contributes an interleaved x y X Y block) and user-overridable.
Alphabet default_order(const Surface& s);

}  // namespace turaev
