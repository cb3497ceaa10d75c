#include "turaev/tensor.hpp"

#include <cassert>
#include <cstdlib>

namespace turaev {

void TensorElement::add(const CyclicWord& left, const CyclicWord& right,
                        Coeff c) {
  if (c == 0) return;
  if (left.is_zero() || right.is_zero()) return;  // zero-class factor
  Key k{left, right};
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement::Coeff TensorElement::coeff(const CyclicWord& left,
                                          const CyclicWord& right) const {
  auto it = terms_.find({left, right});
  return it == terms_.end() ? 0 : it->second;
}

TensorElement TensorElement::swapped() const {
  TensorElement out;
  for (const auto& [k, c] : terms_) out.add(k.second, k.first, c);
  return out;
}

TensorElement TensorElement::negated() const {
  TensorElement out;
  for (const auto& [k, c] : terms_) out.add(k.first, k.second, -c);
  return out;
}

long long manhattan_norm(const TensorElement& x) {
  long long norm = 0;
  for (const auto& [k, c] : x.terms()) norm += std::llabs(c);
  return norm;
}

bool check_coskew(const TensorElement& x) {
  return x.swapped().negated() == x;
}

void TripleTensor::add(const CyclicWord& a, const CyclicWord& b,
                       const CyclicWord& c, Coeff coeff) {
  if (coeff == 0) return;
  if (a.is_zero() || b.is_zero() || c.is_zero()) return;
  Key k{a, b, c};
  auto [it, inserted] = terms_.try_emplace(k, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

TripleTensor TripleTensor::cycled() const {
  TripleTensor out;
  for (const auto& [k, c] : terms_)
    out.add(std::get<2>(k), std::get<0>(k), std::get<1>(k), c);
  return out;
}

}  // namespace turaev
