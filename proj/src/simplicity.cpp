#include "turaev/simplicity.hpp"

#include <cassert>

namespace turaev {

namespace {

void require_nonpower(const CyclicWord& v, const char* op) {
  auto [root, k] = primitive_root(v);
  if (k > 1)
    throw power_input_error(root, k,
                            std::string(op) + ": input is (" + root.str() +
                                ")^" + std::to_string(k) +
                                "; defined only for nonpower classes");
}

}  // namespace

std::size_t self_intersection(const CyclicWord& v, const Alphabet& ab) {
  if (v.is_zero())
    throw invalid_input("self_intersection of the zero class is undefined");
  require_nonpower(v, "self_intersection");
  std::size_t count = enumerate_linked_pairs(v, ab).size();
  assert(count % 2 == 0);
  return count / 2;
}

bool is_power_of_simple(const CyclicWord& v, const Alphabet& ab,
                        bool cross_check) {
  if (v.is_zero())
    throw invalid_input("is_power_of_simple of the zero class is undefined");
  bool lp_empty = enumerate_linked_pairs(v, ab).empty();
  if (cross_check) {
    bool by_closed_form = cobracket_power(v, 3, ab).is_zero();
    bool by_expansion = cobracket(power(v, 3), ab).is_zero();
    if (by_closed_form != lp_empty || by_expansion != lp_empty)
      throw std::logic_error(
          "is_power_of_simple: delta(v^3) = 0 disagrees with LP1 emptiness "
          "for " +
          v.str());
  }
  return lp_empty;
}

NormIdentityReport verify_norm_identity(const CyclicWord& v, int p,
                                        const Alphabet& ab) {
  if (p < 4)
    throw invalid_input("verify_norm_identity requires p >= 4, got " +
                        std::to_string(p));
  if (v.is_zero())
    throw invalid_input("verify_norm_identity of the zero class is undefined");
  require_nonpower(v, "verify_norm_identity");

  NormIdentityReport r;
  r.lp_count = enumerate_linked_pairs(v, ab).size();
  r.s = r.lp_count / 2;
  r.norm = manhattan_norm(cobracket_power(v, p, ab));
  auto pp = static_cast<long long>(p) * p;
  r.holds = (r.norm == pp * static_cast<long long>(r.lp_count)) &&
            (r.lp_count == 2 * r.s);
  return r;
}

ClassReport make_class_report(const CyclicWord& v, const Alphabet& ab) {
  if (v.is_zero())
    throw invalid_input("class report of the zero class is undefined");
  ClassReport rep;
  rep.word = v;
  auto [root, k] = primitive_root(v);
  rep.primitive = root;
  rep.exponent = k;
  rep.linked_pair_count = enumerate_linked_pairs(v, ab).size();
  if (k == 1) rep.self_intersection = rep.linked_pair_count / 2;
  rep.is_power_of_simple = (rep.linked_pair_count == 0);
  return rep;
}

}  // namespace turaev
