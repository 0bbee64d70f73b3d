// rank1: command-line front end.
//
// Reports are `key: value` lines on stdout. Exit status is 0 for a definite
// answer, 2 when the answer is unknown and 1 for input errors.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "rank1/error.hpp"
#include "rank1/expectedness.hpp"
#include "rank1/isomorphism.hpp"
#include "rank1/spec_io.hpp"
#include "rank1/subshift.hpp"

namespace {

using namespace rank1;

constexpr int kDefinite = 0;
constexpr int kInputError = 1;
constexpr int kUnknown = 2;

RankOneSpec load_spec(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    return parse_spec(text, "<stdin>");
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  text.assign(std::istreambuf_iterator<char>(in), {});
  return parse_spec(text, path);
}

std::vector<int> parse_bits(const std::string& s, const char* what) {
  std::vector<int> bits;
  for (char c : s) {
    if (c != '0' && c != '1') throw Error(ErrorKind::ParseError, std::string(what) + " must be a 0/1 string");
    bits.push_back(c - '0');
  }
  return bits;
}

int exit_for(const Verdict& v) { return v.is_unknown() ? kUnknown : kDefinite; }

void print_verdict(const SchemeVerdict& r) {
  const Verdict& v = r.verdict;
  std::cout << "verdict: " << to_string(v.answer) << '\n';
  if (v.is_yes()) {
    std::cout << "norm: " << r.norm << '\n' << "v: " << r.scheme->v << '\n' << "w: " << r.scheme->w << '\n';
    std::cout << "summary: yes norm=" << r.norm << " v=" << r.scheme->v << " w=" << r.scheme->w << '\n';
  } else if (v.is_no()) {
    std::cout << "certificate: " << v.detail << '\n' << "summary: no " << v.detail << '\n';
  } else {
    std::cout << "bound: " << v.bound << '\n' << "summary: unknown bound=" << v.bound << '\n';
  }
}

std::string tail_name(const RankOneSpec& spec) {
  if (const auto* p = std::get_if<Periodic>(&spec.tail())) return "periodic, cycle of " + std::to_string(p->cycle.size());
  if (std::holds_alternative<Arithmetic>(spec.tail())) return spec.growing() ? "arithmetic, growing" : "arithmetic, constant";
  return "truncated";
}

int cmd_analyze(const std::string& path, std::size_t depth, Count gap_count) {
  const RankOneSpec spec = load_spec(path);
  SpecClass cls = classify(spec);
  std::cout << "stages: " << spec.prefix().size() << '\n' << "tail: " << tail_name(spec) << '\n';
  std::cout << "class: " << to_string(cls) << '\n';
  if (cls == SpecClass::Degenerate) {
    std::cout << "canonical: none (periodic word)\n";
  } else {
    try {
      const auto seq = canonical_sequence(spec, depth);
      for (std::size_t i = 0; i < seq.size(); ++i)
        std::cout << "canonical." << i << ": " << (seq[i].length() <= 200 ? seq[i].render() : "<" + std::to_string(seq[i].length()) + " symbols>")
                  << '\n';
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DepthExhausted) throw;
      std::cout << "canonical: unknown (" << e.what() << ")\n";
      cls = SpecClass::Unknown;
    }
  }
  std::cout << "gaps:";
  try {
    for (Count i = 1; i <= gap_count; ++i) std::cout << ' ' << gap_function(spec, i);
    std::cout << '\n';
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DepthExhausted) throw;
    std::cout << " ...\n";
  }
  return cls == SpecClass::Unknown ? kUnknown : kDefinite;
}

SpecialPoint parse_point(const std::string& s) {
  if (s == "all-ones") return SpecialPoint::AllOnes;
  if (s == "first-zero") return SpecialPoint::FirstZero;
  if (s == "last-zero") return SpecialPoint::LastZero;
  throw Error(ErrorKind::ParseError, "point must be all-ones, first-zero or last-zero");
}

int cmd_expected(const std::string& path, const std::string& window_literal, const std::string& word, Count t) {
  const RankOneSpec spec = load_spec(path);
  const Window window = parse_window(window_literal);
  const FiniteWord v = FiniteWord::parse(word);
  if (t == 0 && std::holds_alternative<Floating>(window.anchor)) t = consecutiveness_bound(spec, v);
  if (t > 0) std::cout << "t: " << t << '\n';
  const WindowDecomposition d = decompose_window(window, v, {&spec, t});
  bool unknown = !d.coverage.determined;
  for (const OccurrenceTag& tag : d.tags) {
    std::cout << "occurrence." << tag.position << ": " << (tag.expected == Answer::Yes ? "expected" : tag.expected == Answer::No ? "unexpected" : "unknown")
              << '\n';
    unknown = unknown || tag.expected == Answer::Unknown;
  }
  std::cout << "expected-starts:";
  for (Count s : d.expected_starts) std::cout << ' ' << s;
  std::cout << '\n' << "zeros: " << d.coverage.zeros << '\n';
  std::cout << "interior-zeros: " << d.coverage.interior_zeros << '\n';
  std::cout << "covered-once: " << d.coverage.interior_covered_once << '\n';
  std::cout << "boundary-zeros: " << d.coverage.boundary_zeros.size() << '\n';
  std::cout << "coverage: " << (d.coverage.determined ? "determined" : "undetermined") << '\n';
  return unknown ? kUnknown : kDefinite;
}

int run(int argc, char** argv) {
  CLI::App app{"Rank-one words and subshifts"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every command");

  std::string a_path;
  std::string b_path;
  std::size_t depth = 4;
  Count gap_count = 32;
  auto* analyze = app.add_subcommand("analyze", "Classification, canonical words and the gap function");
  analyze->add_option("spec", a_path, "Spec file, or - for stdin")->required();
  analyze->add_option("--depth", depth, "Number of canonical words")->capture_default_str();
  analyze->add_option("--gaps", gap_count, "Number of gap values")->capture_default_str();

  Count length = 0;
  std::string point;
  Count radius = 0;
  auto* expand = app.add_subcommand("expand", "Prefix of V, or a window around a special point");
  expand->add_option("spec", a_path)->required();
  expand->add_option("length", length, "Number of symbols");
  expand->add_option("--point", point, "all-ones, first-zero or last-zero");
  expand->add_option("--radius", radius, "Window radius for --point")->capture_default_str();

  auto* cls = app.add_subcommand("classify", "Degenerate, minimal or non-minimal");
  cls->add_option("spec", a_path)->required();

  Count max_norm = 16;
  bool family = false;
  auto* iso = app.add_subcommand("iso", "Search for a replacement scheme");
  iso->add_option("a", a_path)->required();
  iso->add_option("b", b_path)->required();
  iso->add_option("--max-norm", max_norm, "Largest scheme norm searched")->capture_default_str();
  iso->add_flag("--e0", family, "Decide exactly for two E0 words");

  auto* dist = app.add_subcommand("dist", "Ultrametric distance");
  dist->add_option("a", a_path)->required();
  dist->add_option("b", b_path)->required();

  std::string bits;
  std::string tail_bits = "0";
  auto* e0 = app.add_subcommand("e0", "Spec of the E0 word for a bit string");
  e0->add_option("bits", bits, "Prefix bits")->required();
  e0->add_option("--tail", tail_bits, "Repeating tail bits")->capture_default_str();

  auto* inverse = app.add_subcommand("inverse", "Is the system isomorphic to its inverse");
  inverse->add_option("spec", a_path)->required();
  inverse->add_option("--max-norm", max_norm)->capture_default_str();

  std::string window;
  std::string word;
  Count t = 0;
  auto* expected = app.add_subcommand("expected", "Expected occurrences of a word in a window");
  expected->add_option("spec", a_path)->required();
  expected->add_option("window", window, "V@<offset>:bits, first@<k>:bits, last@<k>:bits or float:bits")->required();
  expected->add_option("word", word)->required();
  expected->add_option("--t", t, "Override the run bound used by the local rule");

  std::size_t search_depth = 12;
  auto* admissible = app.add_subcommand("admissible", "Does a word occur in V");
  admissible->add_option("spec", a_path)->required();
  admissible->add_option("word", word)->required();
  admissible->add_option("--depth", search_depth)->capture_default_str();

  auto* subwords = app.add_subcommand("subwords", "All subwords of V of a given length");
  subwords->add_option("spec", a_path)->required();
  subwords->add_option("length", length)->required();
  subwords->add_option("--depth", search_depth)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (*analyze) return cmd_analyze(a_path, depth, gap_count);
  if (*expand) {
    if (point.empty() == (expand->count("length") == 0))
      throw Error(ErrorKind::ParseError, "expand needs either a length or --point");
    const RankOneSpec spec = load_spec(a_path);
    if (!point.empty()) {
      std::cout << "window: " << render_window(special_point_window(spec, parse_point(point), radius)) << '\n';
    } else {
      std::cout << "prefix: " << expand_prefix(spec, length) << '\n';
    }
    return kDefinite;
  }
  if (*cls) {
    const SpecClass c = classify(load_spec(a_path));
    std::cout << "class: " << to_string(c) << '\n';
    return c == SpecClass::Unknown ? kUnknown : kDefinite;
  }
  if (*iso) {
    const RankOneSpec a = load_spec(a_path);
    const RankOneSpec b = load_spec(b_path);
    const SchemeVerdict r = family ? decide_isomorphism_e0(a, b) : decide_isomorphism(a, b, max_norm);
    print_verdict(r);
    return exit_for(r.verdict);
  }
  if (*dist) {
    std::cout << "d: " << ultrametric_distance(load_spec(a_path), load_spec(b_path)).render() << '\n';
    return kDefinite;
  }
  if (*e0) {
    std::cout << write_spec(e0_encode(parse_bits(bits, "bits"), parse_bits(tail_bits, "tail")));
    return kDefinite;
  }
  if (*inverse) {
    const InverseReport r = decide_inverse_isomorphic(load_spec(a_path), max_norm);
    std::cout << "symmetric: " << to_string(r.symmetric.answer) << '\n';
    std::cout << "search: " << to_string(r.search.verdict.answer) << '\n';
    if (r.search.scheme) std::cout << "search-scheme: " << r.search.scheme->v << ' ' << r.search.scheme->w << '\n';
    std::cout << "verdict: " << to_string(r.combined.answer) << '\n';
    std::cout << "detail: " << r.combined.detail << '\n';
    return exit_for(r.combined);
  }
  if (*expected) return cmd_expected(a_path, window, word, t);
  if (*admissible) {
    const AdmissibilityReport r = is_admissible(word, load_spec(a_path), search_depth);
    std::cout << "verdict: " << to_string(r.verdict.answer) << '\n';
    if (r.witness) std::cout << "stage: " << r.witness->stage << '\n' << "offset: " << r.witness->offset << '\n';
    if (r.verdict.is_unknown()) std::cout << "bound: " << r.verdict.bound << '\n';
    return exit_for(r.verdict);
  }
  if (*subwords) {
    const Language lang = enumerate_subwords(load_spec(a_path), length, search_depth);
    std::cout << (lang.complete ? "complete" : "lower-bound") << '\n';
    for (const std::string& w : lang.words) std::cout << w << '\n';
    return lang.complete ? kDefinite : kUnknown;
  }
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const rank1::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
