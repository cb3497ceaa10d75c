// Command-line front end. Every subcommand is a thin adapter over the
// library; output is deterministic, text by default, JSON with --format
// json. The alphabet order is printed alongside every result. Exit codes:
// 0 success, 1 invalid input, 2 invariant violation found by verify.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "turaev/json_io.hpp"
#include "turaev/surface.hpp"

using json = nlohmann::json;
using namespace turaev;

namespace {

struct CommonArgs {
  std::string order;
  std::string surface;
  std::string format = "text";
  bool json_format() const { return format == "json"; }
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--order", args.order,
                  "alphabet order listing all 2q letters, e.g. abBA");
  cmd->add_option("--surface", args.surface,
                  "surface \"g,b\"; uses its default order")
      ->excludes("--order");
  cmd->add_option("--format", args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

Alphabet resolve_alphabet(const CommonArgs& args) {
  if (!args.order.empty()) return Alphabet::from_order(args.order);
  if (!args.surface.empty())
    return default_order(Surface::parse(args.surface));
  if (const char* env = std::getenv("TURAEV_ORDER"))
    return Alphabet::from_order(env);
  throw invalid_input(
      "no alphabet order: pass --order or --surface, or set TURAEV_ORDER");
}

std::vector<int> parse_powers(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw invalid_input("invalid power \"" + item + "\" in --p list");
    }
  }
  if (out.empty()) throw invalid_input("--p list is empty");
  return out;
}

void emit(const CommonArgs& args, const json& payload,
          const std::string& text) {
  if (args.json_format())
    std::cout << payload.dump() << "\n";
  else
    std::cout << text << "\n";
}

std::string word_or_zero(const CyclicWord& v) {
  return v.is_zero() ? "(zero class)" : v.str();
}

int run(int argc, char** argv) {
  CLI::App app{"combinatorial cobracket on cyclic words of a free group"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string word_text;
  int p = 1;
  std::size_t max_len = 7;
  std::string powers_text = "3,4";
  int threads = 1;
  bool cross_check = false;

  auto* reduce = app.add_subcommand("reduce", "freely reduce a word");
  add_common(reduce, args);
  reduce->add_option("--word", word_text)->required();

  auto* canon = app.add_subcommand(
      "canon", "canonical representative of the cyclic class");
  add_common(canon, args);
  canon->add_option("--word", word_text)->required();

  auto* power_cmd = app.add_subcommand("power", "p-th power of a word");
  add_common(power_cmd, args);
  power_cmd->add_option("--word", word_text)->required();
  power_cmd->add_option("--p", p)->required();

  auto* root_cmd = app.add_subcommand(
      "root", "primitive root and exponent of the class");
  add_common(root_cmd, args);
  root_cmd->add_option("--word", word_text)->required();

  auto* lp_cmd = app.add_subcommand("linked-pairs",
                                    "enumerate the linked pairs of a class");
  add_common(lp_cmd, args);
  lp_cmd->add_option("--word", word_text)->required();

  auto* cob = app.add_subcommand("cobracket", "cobracket of a class");
  add_common(cob, args);
  cob->add_option("--word", word_text)->required();

  auto* cobp = app.add_subcommand(
      "cobracket-power", "cobracket of the p-th power, closed form");
  add_common(cobp, args);
  cobp->add_option("--word", word_text)->required();
  cobp->add_option("--p", p)->required();

  auto* norm = app.add_subcommand(
      "norm", "Manhattan norm of the cobracket of the p-th power");
  add_common(norm, args);
  norm->add_option("--word", word_text)->required();
  norm->add_option("--p", p, "exponent, default 1");

  auto* selfi = app.add_subcommand("self-intersection",
                                   "self-intersection number (nonpower only)");
  add_common(selfi, args);
  selfi->add_option("--word", word_text)->required();

  auto* simple = app.add_subcommand(
      "is-simple", "does the class contain a power of a simple curve");
  add_common(simple, args);
  simple->add_option("--word", word_text)->required();
  simple->add_flag("--check", cross_check,
                   "also verify the cube decision both ways");

  auto* verify = app.add_subcommand(
      "verify", "run every identity over all classes up to --max-len");
  add_common(verify, args);
  verify->add_option("--max-len", max_len)->required();
  verify->add_option("--p", powers_text, "comma-separated powers, default 3,4");
  verify->add_option("--threads", threads,
                     "worker count; 1 = serial, 0 = all cores");

  auto* search = app.add_subcommand(
      "search", "find classes with zero cobracket but positive "
                "self-intersection; one JSON record per line");
  add_common(search, args);
  search->add_option("--max-len", max_len)->required();
  search->add_option("--threads", threads,
                     "worker count; 1 = serial, 0 = all cores");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  Alphabet ab = resolve_alphabet(args);
  auto parse_word = [&] { return LinearWord::parse(word_text, ab); };

  if (*reduce) {
    LinearWord r = reduce_linear(parse_word());
    emit(args, {{"order", ab.order()}, {"word", r.str()}},
         "order: " + ab.order() + "\n" + r.str());
  } else if (*canon) {
    CyclicWord v = canonicalize(parse_word(), ab);
    emit(args, {{"order", ab.order()}, {"word", v.str()}},
         "order: " + ab.order() + "\n" + word_or_zero(v));
  } else if (*power_cmd) {
    LinearWord r = power(cyclic_reduce(reduce_linear(parse_word())), p);
    emit(args, {{"order", ab.order()}, {"word", r.str()}},
         "order: " + ab.order() + "\n" + r.str());
  } else if (*root_cmd) {
    auto [root, k] = primitive_root(canonicalize(parse_word(), ab));
    emit(args,
         {{"order", ab.order()}, {"root", root.str()}, {"exponent", k}},
         "order: " + ab.order() + "\n" + root.str() + "^" +
             std::to_string(k));
  } else if (*lp_cmd) {
    // Indices refer to the user's own rotation (after reduction), so the
    // output matches the word as typed.
    LinearWord rep = cyclic_reduce(reduce_linear(parse_word()));
    LinkedPairSet lp = rep.empty() ? LinkedPairSet{}
                                   : enumerate_linked_pairs(rep, ab);
    json payload = {{"order", ab.order()},
                    {"word", rep.str()},
                    {"pairs", to_json(lp)}};
    std::ostringstream text;
    text << "order: " << ab.order() << "\nword: "
         << (rep.empty() ? "(zero class)" : rep.str())
         << "\npairs: " << lp.size();
    for (const LinkedPair& q : lp.pairs)
      text << "\n(" << q.i << "," << q.j << ") type " << static_cast<int>(q.kind)
           << " r=" << q.r << " sign=" << (q.sign > 0 ? "+1" : "-1");
    emit(args, payload, text.str());
  } else if (*cob || *cobp || *norm) {
    CyclicWord v = canonicalize(parse_word(), ab);
    int exponent = (*cob) ? 1 : p;
    TensorElement d = v.is_zero() ? TensorElement{}
                                  : cobracket_power(v, exponent, ab);
    if (*norm) {
      emit(args,
           {{"order", ab.order()},
            {"word", v.str()},
            {"p", exponent},
            {"norm", manhattan_norm(d)}},
           "order: " + ab.order() + "\nnorm: " +
               std::to_string(manhattan_norm(d)));
    } else {
      json payload = {{"order", ab.order()},
                      {"word", v.str()},
                      {"p", exponent},
                      {"terms", to_json(d)}};
      std::ostringstream text;
      text << "order: " << ab.order() << "\nword: " << word_or_zero(v)
           << "\nterms: " << d.term_count();
      for (const auto& item : to_json(d))
        text << "\n" << item["coeff"].get<long long>() << " * "
             << item["left"].get<std::string>() << " (x) "
             << item["right"].get<std::string>();
      emit(args, payload, text.str());
    }
  } else if (*selfi) {
    CyclicWord v = canonicalize(parse_word(), ab);
    std::size_t s = self_intersection(v, ab);
    emit(args,
         {{"order", ab.order()},
          {"word", v.str()},
          {"self_intersection", s}},
         "order: " + ab.order() + "\ns = " + std::to_string(s));
  } else if (*simple) {
    CyclicWord v = canonicalize(parse_word(), ab);
    ClassReport r = make_class_report(v, ab);
    if (cross_check) is_power_of_simple(v, ab, true);
    std::string text = "order: " + ab.order() + "\n";
    if (r.is_power_of_simple && r.exponent > 1)
      text += "true (power of simple: " + r.primitive.str() + "^" +
              std::to_string(r.exponent) + ")";
    else if (r.is_power_of_simple)
      text += "true (simple: " + r.primitive.str() + ")";
    else
      text += "false (|LP1| = " + std::to_string(r.linked_pair_count) + ")";
    emit(args, {{"order", ab.order()}, {"report", to_json(r)}}, text);
  } else if (*verify) {
    SweepOptions opt;
    opt.max_len = max_len;
    opt.powers = parse_powers(powers_text);
    opt.threads = threads;
    VerifySummary s = exhaustive_verify(ab, opt);
    json payload = to_json(s);
    payload["order"] = ab.order();
    std::ostringstream text;
    text << "order: " << ab.order() << "\nwords: " << s.words
         << " (nonpower " << s.nonpower_words << ")\nlinked pairs: "
         << s.linked_pairs << "\nviolations: " << s.violations.size();
    for (const Violation& v : s.violations)
      text << "\n" << v.check << " " << v.word << " " << v.detail;
    emit(args, payload, text.str());
    return s.ok() ? 0 : 2;
  } else if (*search) {
    auto found = search_turaev1_counterexamples(ab, max_len, threads);
    if (args.json_format()) {
      // Streaming interface: one record per line.
      for (const ClassReport& r : found) {
        json rec = to_json(r);
        rec["order"] = ab.order();
        std::cout << rec.dump() << "\n";
      }
    } else {
      std::cout << "order: " << ab.order() << "\nfound: " << found.size()
                << "\n";
      for (const ClassReport& r : found)
        std::cout << r.word.str() << " s=" << *r.self_intersection << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
