#include "rank1/spec_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "rank1/error.hpp"

namespace rank1 {

namespace {

struct Token {
  std::string text;
  int line = 0;
  int column = 0;
};

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.'; }

class Parser {
 public:
  Parser(std::string_view text, std::string_view source) : source_(source) { tokenize(text); }

  RankOneSpec parse() {
    expect("rank1-spec");
    const Token& version = next("a format version");
    if (version.text != "v1") fail(version, "unsupported format version '" + version.text + "'");
    std::vector<Stage> prefix;
    while (peek_is("stage")) prefix.push_back(stage());
    if (at_end()) fail_at_end("missing tail line");
    const Token& kw = next("'tail'");
    if (kw.text != "tail") fail(kw, "expected 'stage' or 'tail', found '" + kw.text + "'");
    TailPolicy tail = tail_policy();
    if (!at_end()) fail(tokens_[pos_], "unexpected '" + tokens_[pos_].text + "' after the tail line");
    try {
      return RankOneSpec(std::move(prefix), std::move(tail));
    } catch (const Error& e) {
      fail(kw, e.what());
    }
  }

 private:
  void tokenize(std::string_view text) {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < text.size();) {
      const char c = text[i];
      if (c == '\n') {
        ++line;
        column = 1;
        ++i;
      } else if (c == '#') {
        while (i < text.size() && text[i] != '\n') ++i;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        ++column;
      } else if (std::string_view("[],{};").find(c) != std::string_view::npos) {
        tokens_.push_back({std::string(1, c), line, column});
        ++i;
        ++column;
      } else if (word_char(c)) {
        const std::size_t start = i;
        while (i < text.size() && word_char(text[i])) ++i;
        tokens_.push_back({std::string(text.substr(start, i - start)), line, column});
        column += static_cast<int>(i - start);
      } else {
        fail({std::string(1, c), line, column}, std::string("unexpected character '") + c + "'");
      }
    }
    end_line_ = line;
    end_column_ = column;
  }

  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw Error(ErrorKind::ParseError,
                std::string(source_) + ":" + std::to_string(at.line) + ":" + std::to_string(at.column) + ": " + message);
  }
  [[noreturn]] void fail_at_end(const std::string& message) const { fail({"", end_line_, end_column_}, message); }

  bool at_end() const { return pos_ >= tokens_.size(); }
  bool peek_is(std::string_view s) const { return !at_end() && tokens_[pos_].text == s; }

  const Token& next(const std::string& what) {
    if (at_end()) fail_at_end("expected " + what + " before end of input");
    return tokens_[pos_++];
  }

  const Token& expect(std::string_view s) {
    const Token& t = next("'" + std::string(s) + "'");
    if (t.text != s) fail(t, "expected '" + std::string(s) + "', found '" + t.text + "'");
    return t;
  }

  Count integer(const std::string& what) {
    const Token& t = next(what);
    Count value = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) fail(t, "integer out of range");
    if (ec != std::errc() || ptr != last || value < 0) fail(t, "expected " + what + ", found '" + t.text + "'");
    return value;
  }

  std::vector<Count> list() {
    expect("[");
    std::vector<Count> out;
    if (peek_is("]")) {
      ++pos_;
      return out;
    }
    for (;;) {
      out.push_back(integer("a gap value"));
      const Token& sep = next("',' or ']'");
      if (sep.text == "]") return out;
      if (sep.text != ",") fail(sep, "expected ',' or ']', found '" + sep.text + "'");
    }
  }

  Stage stage() {
    const Token& kw = expect("stage");
    const Count r = integer("a cut count");
    const Token& open = tokens_[pos_ < tokens_.size() ? pos_ : pos_ - 1];
    std::vector<Count> gaps = list();
    if (r < 2) fail(kw, "a stage needs at least 2 cuts");
    if (static_cast<Count>(gaps.size()) != r - 1)
      fail(open, "stage with " + std::to_string(r) + " cuts needs " + std::to_string(r - 1) + " gaps, found " +
                     std::to_string(gaps.size()));
    return Stage(r, std::move(gaps));
  }

  TailPolicy tail_policy() {
    const Token& kind = next("a tail kind");
    if (kind.text == "truncated") return Truncated{};
    if (kind.text == "periodic") {
      expect("{");
      Periodic p;
      for (;;) {
        p.cycle.push_back(stage());
        const Token& sep = next("';' or '}'");
        if (sep.text == "}") break;
        if (sep.text != ";") fail(sep, "expected ';' or '}', found '" + sep.text + "'");
      }
      return p;
    }
    if (kind.text == "arithmetic") {
      Arithmetic a;
      a.base = stage();
      const Token& inc = expect("inc");
      a.increment = list();
      if (static_cast<Count>(a.increment.size()) != a.base.cuts - 1)
        fail(inc, "increment needs " + std::to_string(a.base.cuts - 1) + " entries, found " +
                      std::to_string(a.increment.size()));
      return a;
    }
    fail(kind, "unknown tail kind '" + kind.text + "'");
  }

  std::string_view source_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int end_line_ = 1;
  int end_column_ = 1;
};

void write_list(std::ostream& os, const std::vector<Count>& xs) {
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << ']';
}

void write_stage(std::ostream& os, const Stage& s) {
  os << "stage " << s.cuts << ' ';
  write_list(os, s.gaps);
}

}  // namespace

RankOneSpec parse_spec(std::string_view text, std::string_view source) { return Parser(text, source).parse(); }

std::string write_spec(const RankOneSpec& spec) {
  std::ostringstream os;
  os << "rank1-spec v1\n";
  for (const Stage& s : spec.prefix()) {
    write_stage(os, s);
    os << '\n';
  }
  os << "tail ";
  if (const auto* p = std::get_if<Periodic>(&spec.tail())) {
    os << "periodic { ";
    for (std::size_t i = 0; i < p->cycle.size(); ++i) {
      if (i) os << " ; ";
      write_stage(os, p->cycle[i]);
    }
    os << " }";
  } else if (const auto* a = std::get_if<Arithmetic>(&spec.tail())) {
    os << "arithmetic ";
    write_stage(os, a->base);
    os << " inc ";
    write_list(os, a->increment);
  } else {
    os << "truncated";
  }
  os << '\n';
  return os.str();
}

}  // namespace rank1
