#include "ihull/io.hpp"

#include <fstream>
#include <sstream>

#include "ihull/constructors.hpp"

namespace ihull {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<std::string> split(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::vector<Line> lex(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  for (int n = 1; std::getline(in, raw); ++n) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    auto tokens = split(raw);
    if (!tokens.empty()) out.push_back({n, std::move(tokens)});
  }
  return out;
}

class Reader {
public:
  Reader(std::vector<Line> lines, std::string origin) : lines_(std::move(lines)), origin_(std::move(origin)) {}

  [[noreturn]] void fail(int line, const std::string& msg) const {
    throw Error(ErrorKind::Input, origin_ + ":" + std::to_string(line) + ": " + msg);
  }
  [[noreturn]] void fail(const std::string& msg) const {
    fail(pos_ < lines_.size() ? lines_[pos_].number : last_line(), msg);
  }
  int last_line() const { return lines_.empty() ? 0 : lines_.back().number; }

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }
  const Line& next() { return lines_[pos_++]; }

  // "key: a b c" on one line; the key token must end with ':'.
  std::vector<std::string> field(const std::string& key) {
    if (done()) fail("expected '" + key + ":'");
    const Line& l = next();
    if (l.tokens[0] != key + ":") fail(l.number, "expected '" + key + ":', found '" + l.tokens[0] + "'");
    return {l.tokens.begin() + 1, l.tokens.end()};
  }

  std::vector<std::vector<std::string>> rows(std::size_t count, std::size_t width, const std::string& what) {
    std::vector<std::vector<std::string>> out;
    for (std::size_t i = 0; i < count; ++i) {
      if (done()) fail(what + ": expected " + std::to_string(count) + " rows, found " + std::to_string(i));
      const Line& l = next();
      if (l.tokens.size() != width)
        fail(l.number, what + " row has " + std::to_string(l.tokens.size()) + " entries, expected " +
                           std::to_string(width));
      out.push_back(l.tokens);
    }
    return out;
  }

  void finish() const {
    if (!done()) fail("unexpected '" + peek().tokens[0] + "'");
  }

  template <class F>
  auto guarded(int line, F&& f) const {
    try {
      return f();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Input && e.kind() != ErrorKind::Precondition) throw;
      fail(line, e.what());
    }
  }

private:
  std::vector<Line> lines_;
  std::string origin_;
  std::size_t pos_ = 0;
};

int to_int(const Reader& r, int line, const std::string& tok) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used == tok.size()) return v;
  } catch (const std::exception&) {
  }
  r.fail(line, "not an integer: '" + tok + "'");
}

Semigroup read_table(Reader& r, bool monoid) {
  const int at = r.done() ? r.last_line() : r.peek().number;
  auto names = r.field("elements");
  if (names.empty()) r.fail(at, "empty element list");
  if (!r.field("table").empty()) r.fail("'table:' takes no values; rows follow on their own lines");
  auto rows = r.rows(names.size(), names.size(), "table");
  r.finish();
  if (monoid) return r.guarded(at, [&] { return adjoin_zero(names, rows); });
  return r.guarded(at, [&] { return Semigroup::validate(names, "0", rows); });
}

Semigroup read_language(Reader& r) {
  const int at = r.done() ? r.last_line() : r.peek().number;
  auto alphabet = r.field("alphabet");
  auto words = r.field("words");
  LanguageMode mode = LanguageMode::Validate;
  if (!r.done() && r.peek().tokens[0] == "mode:") {
    auto m = r.field("mode");
    if (m == std::vector<std::string>{"close"}) mode = LanguageMode::Close;
    else if (m == std::vector<std::string>{"validate"}) mode = LanguageMode::Validate;
    else r.fail("mode must be 'close' or 'validate'");
  }
  r.finish();
  return r.guarded(at, [&] { return language_semigroup(alphabet, words, mode); });
}

Semigroup read_markov(Reader& r) {
  const int at = r.done() ? r.last_line() : r.peek().number;
  auto alphabet = r.field("alphabet");
  if (!r.field("matrix").empty()) r.fail("'matrix:' takes no values; rows follow on their own lines");
  const int first = r.done() ? r.last_line() : r.peek().number;
  auto rows = r.rows(alphabet.size(), alphabet.size(), "matrix");
  std::vector<std::vector<int>> matrix;
  for (const auto& row : rows) {
    matrix.emplace_back();
    for (const auto& t : row) matrix.back().push_back(to_int(r, first, t));
  }
  auto maxlen = r.field("maxlen");
  if (maxlen.size() != 1) r.fail("maxlen takes one value");
  const int n = to_int(r, r.last_line(), maxlen[0]);
  r.finish();
  return r.guarded(at, [&] { return markov_semigroup(alphabet, matrix, n); });
}

}  // namespace

const char* input_kind_name(InputKind kind) {
  switch (kind) {
    case InputKind::Table: return "semigroup";
    case InputKind::Language: return "language";
    case InputKind::Markov: return "markov";
    case InputKind::Monoid: return "monoid";
    case InputKind::Fixture: return "fixture";
  }
  return "?";
}

InputDocument parse_input_text(const std::string& text, const std::string& origin) {
  auto lines = lex(text);
  Reader r(lines, origin);
  if (r.done()) r.fail(1, "empty input");
  const Line header = r.next();
  if (header.tokens.size() != 1) r.fail(header.number, "header line must be a single token");
  const std::string& h = header.tokens[0];
  InputDocument doc;
  doc.origin = origin;
  if (h == "semigroup:") {
    doc.kind = InputKind::Table;
    doc.semigroup = read_table(r, false);
  } else if (h == "monoid:") {
    doc.kind = InputKind::Monoid;
    doc.semigroup = read_table(r, true);
  } else if (h == "language:") {
    doc.kind = InputKind::Language;
    doc.semigroup = read_language(r);
  } else if (h == "markov:") {
    doc.kind = InputKind::Markov;
    doc.semigroup = read_markov(r);
  } else {
    r.fail(header.number, "unknown kind '" + h + "'");
  }
  return doc;
}

InputDocument parse_input_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Input, path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input_text(buf.str(), path);
}

InputDocument load_input(const std::string& spec) {
  const std::string prefix = "fixture:";
  if (spec.rfind(prefix, 0) != 0) return parse_input_file(spec);
  InputDocument doc;
  doc.kind = InputKind::Fixture;
  doc.origin = spec;
  doc.semigroup = fixtures::by_name(spec.substr(prefix.size()));
  return doc;
}

}  // namespace ihull
