#include "turaev/surface.hpp"

#include <charconv>

namespace turaev {

namespace {

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0)
    throw invalid_input(std::string("invalid surface ") + what + " \"" +
                        std::string(text) + "\"");
  return value;
}

}  // namespace

Surface Surface::parse(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos)
    throw invalid_input("surface must be \"g,b\", got \"" +
                        std::string(text) + "\"");
  Surface s;
  s.genus = parse_int(text.substr(0, comma), "genus");
  s.boundary = parse_int(text.substr(comma + 1), "boundary count");
  return s;
}

std::string Surface::str() const {
  return std::to_string(genus) + "," + std::to_string(boundary);
}

int rank(const Surface& s) {
  if (s.boundary < 1)
    throw invalid_input(
        "closed surfaces are unsupported: boundary count must be >= 1");
  int q = 2 * s.genus + s.boundary - 1;
  if (q < 1)
    throw invalid_input("surface " + s.str() +
                        " has no essential curves (rank 0)");
  if (q > kMaxGenerators)
    throw invalid_input("surface " + s.str() + " needs rank " +
                        std::to_string(q) + " > 26");
  return q;
}

Alphabet default_order(const Surface& s) {
  int q = rank(s);
  std::string order;
  order.reserve(2 * static_cast<std::size_t>(q));
  // Handle generators pairwise interleaved: x < y < x-bar < y-bar.
  int g = 0;
  for (; g < 2 * s.genus; g += 2) {
    order.push_back(static_cast<char>('a' + g));
    order.push_back(static_cast<char>('a' + g + 1));
    order.push_back(static_cast<char>('A' + g));
    order.push_back(static_cast<char>('A' + g + 1));
  }
  // Remaining (planar) generators ascending, then their inverses
  // descending; for the pair of pants this is the "abBA" order.
  for (int k = g; k < q; ++k) order.push_back(static_cast<char>('a' + k));
  for (int k = q - 1; k >= g; --k) order.push_back(static_cast<char>('A' + k));
  return Alphabet::from_order(order);
}

}  // namespace turaev
