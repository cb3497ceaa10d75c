#include "turaev/sweep.hpp"

#include <algorithm>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace turaev {

namespace {

struct WordResult {
  VerifySummary partial;  // counts and violations for one word
};

void flag(VerifySummary& s, const std::string& check, const CyclicWord& w,
          std::string detail) {
  s.violations.push_back({check, w.str(), std::move(detail)});
}

void verify_word(const CyclicWord& v, const Alphabet& ab,
                 const SweepOptions& opt, VerifySummary& s) {
  const LinearWord& rep = v.canonical();
  auto n = static_cast<std::uint32_t>(rep.length());
  LinkedPairSet lp = enumerate_linked_pairs(rep, ab);
  auto [root, exponent] = primitive_root(v);
  bool nonpower = (exponent == 1);

  s.words += 1;
  s.nonpower_words += nonpower ? 1 : 0;
  s.linked_pairs += lp.size();

  // Frontier letters, injectivity, parity.
  for (std::size_t k = 0; k < lp.pairs.size(); ++k) {
    const LinkedPair& p = lp.pairs[k];
    if (p.i == p.j || rep.at(p.i) == rep.at(p.j) ||
        bar(rep.at(p.i)) == rep.at_mod(static_cast<std::ptrdiff_t>(p.j) - 1))
      flag(s, "frontier-letters", v,
           "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")");
    if (p.sign != 1 && p.sign != -1)
      flag(s, "sign-nonzero", v,
           "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")");
    if (k > 0 && std::pair{lp.pairs[k - 1].i, lp.pairs[k - 1].j} >=
                     std::pair{p.i, p.j})
      flag(s, "pair-injectivity", v, "duplicate or unsorted (i,j)");
  }
  if (nonpower && lp.size() % 2 != 0)
    flag(s, "pair-parity", v, "|LP1| = " + std::to_string(lp.size()));

  // Partner symmetry: membership, involution, antisymmetric signs, the
  // (j,i) criterion, and cyclic reducedness of V_{j,i}.
  for (const LinkedPair& p : lp.pairs) {
    s.symmetry_checks += 1;
    LinkedPair q = symmetry_partner(lp, p);        // throws if missing
    LinkedPair back = symmetry_partner(lp, q);
    if (back != p) flag(s, "partner-involution", v, "");
    if (q.kind != p.kind || q.r != p.r)
      flag(s, "partner-kind", v, "");
    if (q.sign != -p.sign) flag(s, "partner-sign", v, "");
    bool ji_present = lp.find(p.j, p.i) != nullptr;
    bool type12 = p.kind != PairKind::type3;
    if (ji_present != type12) flag(s, "reversed-pair-membership", v, "");
    bool vji_reduced = is_cyclically_reduced(subword(rep, p.j, p.i));
    if (vji_reduced != type12) flag(s, "reversed-subword-reduced", v, "");
  }

  // Power lifting and the closed form of the cobracket of powers.
  for (int p : opt.powers) {
    s.lift_checks += 1;
    LinkedPairSet lifted = lift_to_power(lp, p);
    LinkedPairSet direct = enumerate_linked_pairs(power(rep, p), ab);
    if (lifted.pairs != direct.pairs)
      flag(s, "power-lift", v, "p=" + std::to_string(p));
    if (lifted.size() != static_cast<std::size_t>(p) * p * lp.size())
      flag(s, "power-lift-count", v, "p=" + std::to_string(p));

    s.eq1_checks += 1;
    if (cobracket_power(rep, p, ab) != cobracket(power(rep, p), ab))
      flag(s, "power-cobracket-closed-form", v, "p=" + std::to_string(p));

    if (p >= 4 && nonpower) {
      s.norm_checks += 1;
      NormIdentityReport r = verify_norm_identity(v, p, ab);
      if (!r.holds)
        flag(s, "norm-identity", v,
             "p=" + std::to_string(p) + " norm=" + std::to_string(r.norm) +
                 " lp=" + std::to_string(r.lp_count));
    }
  }

  // The decision procedure: delta(v^3) = 0 iff LP1 empty, via two
  // independent evaluations of delta(v^3), plus primitive consistency.
  s.simple_checks += 1;
  bool lp_empty = lp.empty();
  if (cobracket_power(rep, 3, ab).is_zero() != lp_empty)
    flag(s, "cube-decision-closed-form", v, "");
  if (cobracket(power(rep, 3), ab).is_zero() != lp_empty)
    flag(s, "cube-decision-expanded", v, "");
  if (enumerate_linked_pairs(root, ab).empty() != lp_empty)
    flag(s, "primitive-consistency", v, "");

  // Distinctness of the classes (V_i^m V_{i,j}) across distinct pairs for
  // m >= 2; at m = 1 coincidences may happen and are counted. Classes at
  // different m never collide (their lengths differ by multiples of n
  // plus a nonzero remainder), so equal m is the only case to test.
  if (nonpower && !lp.empty()) {
    for (int m = 1; m <= 3; ++m) {
      std::map<CyclicWord, std::size_t> seen;
      for (const LinkedPair& p : lp.pairs) {
        LinearWord u = power(rotation(rep, p.i), m);
        LinearWord tail = subword(rep, p.i, p.j);
        std::vector<Letter> cat = u.letters();
        cat.insert(cat.end(), tail.letters().begin(), tail.letters().end());
        CyclicWord cls = canonicalize(LinearWord(std::move(cat)), ab);
        if (cls.length() != static_cast<std::size_t>(m) * n +
                                (p.j + n - p.i) % n)
          flag(s, "extended-class-length", v, "");
        seen[cls] += 1;
      }
      if (m >= 2) {
        s.sharpness_checks += 1;
        for (const auto& [cls, count] : seen)
          if (count > 1)
            flag(s, "extended-class-collision", v,
                 "m=" + std::to_string(m) + " class=" + cls.str());
      } else {
        for (const auto& [cls, count] : seen)
          if (count > 1) s.sharpness_m1_coincidences += count - 1;
      }
    }
  }

  // Coalgebra axioms.
  s.coskew_checks += 1;
  if (!check_coskew(cobracket(v, ab))) flag(s, "co-skew", v, "");
  if (rep.length() <= opt.cojacobi_max_len) {
    s.cojacobi_checks += 1;
    if (!check_cojacobi(v, ab)) flag(s, "co-jacobi", v, "");
  }
}

void merge(VerifySummary& into, const VerifySummary& part) {
  into.words += part.words;
  into.nonpower_words += part.nonpower_words;
  into.linked_pairs += part.linked_pairs;
  into.symmetry_checks += part.symmetry_checks;
  into.lift_checks += part.lift_checks;
  into.eq1_checks += part.eq1_checks;
  into.norm_checks += part.norm_checks;
  into.simple_checks += part.simple_checks;
  into.sharpness_checks += part.sharpness_checks;
  into.sharpness_m1_coincidences += part.sharpness_m1_coincidences;
  into.coskew_checks += part.coskew_checks;
  into.cojacobi_checks += part.cojacobi_checks;
  into.violations.insert(into.violations.end(), part.violations.begin(),
                         part.violations.end());
}

// Runs fn over [0, count) either serially (threads == 1) or with an OpenMP
// worker pool. Each index writes only its own slot, so the merged result
// does not depend on the schedule.
template <typename Fn>
void run_indexed(std::size_t count, int threads, const Fn& fn) {
#ifdef _OPENMP
  if (threads != 1) {
    if (threads > 0) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
      for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(count); ++k)
        fn(static_cast<std::size_t>(k));
    } else {
#pragma omp parallel for schedule(dynamic, 16)
      for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(count); ++k)
        fn(static_cast<std::size_t>(k));
    }
    return;
  }
#else
  (void)threads;
#endif
  for (std::size_t k = 0; k < count; ++k) fn(k);
}

}  // namespace

VerifySummary exhaustive_verify(const Alphabet& ab, const SweepOptions& opt) {
  std::vector<CyclicWord> corpus = enumerate_canonical_words(ab, opt.max_len);
  std::vector<VerifySummary> slots(corpus.size());
  run_indexed(corpus.size(), opt.threads, [&](std::size_t k) {
    verify_word(corpus[k], ab, opt, slots[k]);
  });
  VerifySummary total;
  for (const VerifySummary& part : slots) merge(total, part);
  return total;
}

std::vector<ClassReport> search_turaev1_counterexamples(const Alphabet& ab,
                                                        std::size_t max_len,
                                                        int threads) {
  std::vector<CyclicWord> corpus = enumerate_canonical_words(ab, max_len);
  std::vector<char> hit(corpus.size(), 0);
  run_indexed(corpus.size(), threads, [&](std::size_t k) {
    const CyclicWord& v = corpus[k];
    if (primitive_root(v).second != 1) return;
    LinkedPairSet lp = enumerate_linked_pairs(v, ab);
    if (lp.empty()) return;
    if (cobracket(v, ab).is_zero()) hit[k] = 1;
  });
  std::vector<ClassReport> out;
  for (std::size_t k = 0; k < corpus.size(); ++k)
    if (hit[k]) out.push_back(make_class_report(corpus[k], ab));
  return out;
}

}  // namespace turaev
