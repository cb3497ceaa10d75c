#include "turaev/json_io.hpp"

#include <algorithm>

namespace turaev {

using nlohmann::json;

json to_json(const LinkedPairSet& lp) {
  json arr = json::array();
  for (const LinkedPair& p : lp.pairs) {
    json rec;
    rec["i"] = p.i;
    rec["j"] = p.j;
    rec["type"] = static_cast<int>(p.kind);
    rec["r"] = p.r;
    rec["sign"] = p.sign;
    arr.push_back(std::move(rec));
  }
  return arr;
}

json to_json(const TensorElement& x) {
  // Keys sort by the printed word strings, not the internal letter codes.
  std::vector<std::pair<std::pair<std::string, std::string>,
                        TensorElement::Coeff>>
      rows;
  rows.reserve(x.term_count());
  for (const auto& [k, c] : x.terms())
    rows.push_back({{k.first.str(), k.second.str()}, c});
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  json arr = json::array();
  for (const auto& [k, c] : rows) {
    json rec;
    rec["left"] = k.first;
    rec["right"] = k.second;
    rec["coeff"] = c;
    arr.push_back(std::move(rec));
  }
  return arr;
}

json to_json(const ClassReport& r) {
  json rec;
  rec["word"] = r.word.str();
  rec["primitive"] = r.primitive.str();
  rec["exponent"] = r.exponent;
  rec["linked_pairs"] = r.linked_pair_count;
  if (r.self_intersection)
    rec["self_intersection"] = *r.self_intersection;
  else
    rec["self_intersection"] = nullptr;
  rec["is_power_of_simple"] = r.is_power_of_simple;
  return rec;
}

json to_json(const NormIdentityReport& r) {
  json rec;
  rec["norm"] = r.norm;
  rec["lp_count"] = r.lp_count;
  rec["s"] = r.s;
  rec["holds"] = r.holds;
  return rec;
}

json to_json(const VerifySummary& s) {
  json rec;
  rec["words"] = s.words;
  rec["nonpower_words"] = s.nonpower_words;
  rec["linked_pairs"] = s.linked_pairs;
  rec["checks"] = {{"symmetry", s.symmetry_checks},
                   {"power_lift", s.lift_checks},
                   {"power_cobracket", s.eq1_checks},
                   {"norm_identity", s.norm_checks},
                   {"cube_decision", s.simple_checks},
                   {"extended_class_distinctness", s.sharpness_checks},
                   {"co_skew", s.coskew_checks},
                   {"co_jacobi", s.cojacobi_checks}};
  rec["sharpness_m1_coincidences"] = s.sharpness_m1_coincidences;
  json viols = json::array();
  for (const Violation& v : s.violations)
    viols.push_back({{"check", v.check}, {"word", v.word},
                     {"detail", v.detail}});
  rec["violations"] = std::move(viols);
  rec["ok"] = s.ok();
  return rec;
}

}  // namespace turaev
