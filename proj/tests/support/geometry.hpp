#pragma once

// Geometric crossing oracle, independent of the linked-pair machinery.
//
// The alphabet's linear order, read cyclically, is the rotation system of
// a one-vertex fatgraph (a fattened rose): one disk whose boundary carries
// the 2q ribbon ends in that cyclic order, one untwisted band per
// generator. A cyclically reduced word is carried by the fatgraph; its
// traversals become parallel strands in the bands and chords across the
// disk. All crossings happen between chords, and the only freedom is the
// across-order of the strands inside each band (reversed at the two band
// ends). Minimizing the chord crossing count over these orders gives the
// self-intersection number of the class.

#include "turaev/words.hpp"

namespace turaev::reference {

std::size_t min_crossing_number(const LinearWord& rep, const Alphabet& ab);

}  // namespace turaev::reference
