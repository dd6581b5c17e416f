#include "ihull/constructors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ihull {

namespace {

std::string join_word(const std::vector<std::string>& alphabet, const std::vector<int>& w) {
  std::string out;
  for (int c : w) out += alphabet[c];
  return out;
}

bool shortlex(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::vector<int> tokenize_word(const std::vector<std::string>& alphabet,
                               const std::string& word) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < word.size()) {
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      const std::string& tok = alphabet[i];
      if (tok.size() > best_len && word.compare(pos, tok.size(), tok) == 0) {
        best = static_cast<int>(i);
        best_len = tok.size();
      }
    }
    if (best < 0)
      throw Error(ErrorKind::Input, "word '" + word + "' uses a symbol outside the alphabet");
    out.push_back(best);
    pos += best_len;
  }
  if (out.empty()) throw Error(ErrorKind::Input, "empty word");
  return out;
}

std::vector<std::vector<int>> factor_closure(const std::vector<std::vector<int>>& words) {
  std::set<std::vector<int>> all;
  for (const auto& w : words)
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j <= w.size(); ++j)
        all.emplace(w.begin() + i, w.begin() + j);
  return {all.begin(), all.end()};
}

Semigroup language_semigroup(const std::vector<std::string>& alphabet,
                             const std::vector<std::vector<int>>& input,
                             LanguageMode mode) {
  {
    std::set<std::string> seen(alphabet.begin(), alphabet.end());
    if (seen.size() != alphabet.size())
      throw Error(ErrorKind::Input, "duplicate alphabet symbol");
  }
  for (const auto& w : input) {
    if (w.empty()) throw Error(ErrorKind::Input, "empty word in language");
    for (int c : w)
      if (c < 0 || c >= static_cast<int>(alphabet.size()))
        throw Error(ErrorKind::Input, "symbol outside the alphabet");
  }
  std::set<std::vector<int>> L(input.begin(), input.end());
  if (mode == LanguageMode::Close) {
    auto closed = factor_closure(input);
    L.insert(closed.begin(), closed.end());
  } else {
    // Report the shortest missing factor, then the earliest in shortlex order.
    std::vector<std::vector<int>> missing;
    for (const auto& f : factor_closure(input))
      if (!L.count(f)) missing.push_back(f);
    if (!missing.empty()) {
      std::sort(missing.begin(), missing.end(), shortlex);
      throw Error(ErrorKind::Input, "language is not factor-closed: factor \"" +
                                        join_word(alphabet, missing.front()) + "\" missing");
    }
  }
  std::vector<std::vector<int>> words(L.begin(), L.end());
  std::sort(words.begin(), words.end(), shortlex);

  std::vector<std::string> names{"0"};
  std::vector<std::vector<int>> provenance{{}};
  std::map<std::vector<int>, Elem> index;
  for (const auto& w : words) {
    index[w] = static_cast<Elem>(names.size());
    names.push_back(join_word(alphabet, w));
    provenance.push_back(w);
  }
  {
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != names.size())
      throw Error(ErrorKind::Input, "word names collide; alphabet tokens are ambiguous");
  }
  const std::size_t n = names.size();
  std::vector<Elem> table(n * n, 0);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) {
      std::vector<int> w = provenance[i];
      w.insert(w.end(), provenance[j].begin(), provenance[j].end());
      auto it = index.find(w);
      if (it != index.end()) table[i * n + j] = it->second;
    }
  Semigroup S = Semigroup::from_table(std::move(names), 0, std::move(table));
  S.set_words(alphabet, std::move(provenance));
  return S;
}

Semigroup language_semigroup(const std::vector<std::string>& alphabet,
                             const std::vector<std::string>& words, LanguageMode mode) {
  std::vector<std::vector<int>> parsed;
  for (const auto& w : words) parsed.push_back(tokenize_word(alphabet, w));
  return language_semigroup(alphabet, parsed, mode);
}

Semigroup word_truncation(const std::vector<std::string>& alphabet, int max_len) {
  if (max_len < 1) throw Error(ErrorKind::Input, "maxlen must be at least 1");
  std::vector<std::vector<int>> words;
  std::vector<std::vector<int>> frontier{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier)
      for (int c = 0; c < static_cast<int>(alphabet.size()); ++c) {
        auto x = w;
        x.push_back(c);
        next.push_back(x);
      }
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return language_semigroup(alphabet, words, LanguageMode::Validate);
}

Semigroup markov_semigroup(const std::vector<std::string>& alphabet,
                           const std::vector<std::vector<int>>& matrix, int max_len) {
  const std::size_t k = alphabet.size();
  if (k == 0) throw Error(ErrorKind::Input, "empty alphabet");
  if (max_len < 1) throw Error(ErrorKind::Input, "maxlen must be at least 1");
  if (matrix.size() != k) throw Error(ErrorKind::Input, "transition matrix must be square over the alphabet");
  for (const auto& row : matrix) {
    if (row.size() != k) throw Error(ErrorKind::Input, "transition matrix must be square over the alphabet");
    for (int v : row)
      if (v != 0 && v != 1) throw Error(ErrorKind::Input, "transition matrix entries must be 0 or 1");
  }
  std::vector<std::vector<int>> words;
  std::vector<std::vector<int>> frontier;
  for (int c = 0; c < static_cast<int>(k); ++c) frontier.push_back({c});
  for (int len = 1; len <= max_len; ++len) {
    words.insert(words.end(), frontier.begin(), frontier.end());
    if (len == max_len) break;
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier)
      for (int c = 0; c < static_cast<int>(k); ++c)
        if (matrix[w.back()][c]) {
          auto x = w;
          x.push_back(c);
          next.push_back(x);
        }
    frontier = std::move(next);
  }
  return language_semigroup(alphabet, words, LanguageMode::Validate);
}

Semigroup adjoin_zero(const std::vector<std::string>& names,
                      const std::vector<std::vector<std::string>>& rows) {
  std::map<std::string, Elem> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == "0") throw Error(ErrorKind::Input, "monoid element may not be named '0'");
    if (!index.emplace(names[i], static_cast<Elem>(i)).second)
      throw Error(ErrorKind::Input, "duplicate element name '" + names[i] + "'");
  }
  const std::size_t n = names.size();
  if (n == 0) throw Error(ErrorKind::Input, "empty monoid");
  if (rows.size() != n) throw Error(ErrorKind::Input, "monoid table has wrong number of rows");
  const std::size_t m = n + 1;
  std::vector<Elem> table(m * m, static_cast<Elem>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw Error(ErrorKind::Input, "monoid table row " + std::to_string(i + 1) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      auto it = index.find(rows[i][j]);
      if (it == index.end())
        throw Error(ErrorKind::Input, "unknown token '" + rows[i][j] + "' in monoid table");
      table[i * m + j] = it->second;
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (table[table[x * m + y] * m + z] != table[x * m + table[y * m + z]])
          throw Error(ErrorKind::Input, "monoid table is not associative at (" + names[x] + ", " +
                                            names[y] + ", " + names[z] + ")");
  bool unital = false;
  for (std::size_t e = 0; e < n && !unital; ++e) {
    bool ok = true;
    for (std::size_t s = 0; s < n && ok; ++s)
      ok = table[e * m + s] == static_cast<Elem>(s) && table[s * m + e] == static_cast<Elem>(s);
    unital = ok;
  }
  if (!unital) throw Error(ErrorKind::Input, "monoid table has no identity element");
  std::vector<std::string> all = names;
  all.push_back("0");
  return Semigroup::from_table(std::move(all), static_cast<Elem>(n), std::move(table));
}

namespace fixtures {

namespace {

Semigroup from_rule(const std::vector<std::string>& names,
                    const std::map<std::pair<std::string, std::string>, std::string>& products) {
  const std::size_t n = names.size();
  std::map<std::string, Elem> index;
  for (std::size_t i = 0; i < n; ++i) index[names[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(n * n, index.at("0"));
  for (const auto& [key, value] : products)
    table[index.at(key.first) * n + index.at(key.second)] = index.at(value);
  return Semigroup::from_table(names, index.at("0"), std::move(table));
}

}  // namespace

Semigroup trivial() { return Semigroup(); }

Semigroup nilpotent() { return from_rule({"0", "x"}, {}); }

Semigroup fixture_a() {
  return from_rule({"0", "1", "a", "aa"}, {{{"1", "1"}, "1"},
                                           {{"1", "a"}, "a"},
                                           {{"1", "aa"}, "aa"},
                                           {{"a", "1"}, "a"},
                                           {{"aa", "1"}, "aa"},
                                           {{"a", "a"}, "aa"}});
}

Semigroup fixture_b() {
  return Semigroup::validate({"0", "e", "s"}, "0",
                             {{"0", "0", "0"}, {"0", "e", "0"}, {"0", "s", "0"}});
}

Semigroup no_lcm() {
  return from_rule({"0", "a", "b", "c", "ab", "ba", "c2"}, {{{"a", "b"}, "ab"},
                                                           {{"b", "a"}, "ba"},
                                                           {{"a", "c"}, "c2"},
                                                           {{"b", "c"}, "c2"},
                                                           {{"c", "c"}, "c2"}});
}

Semigroup language_abaaba() {
  return language_semigroup({"a", "b"}, std::vector<std::string>{"a", "b", "aa", "ba"},
                            LanguageMode::Validate);
}

Semigroup words_len2() { return word_truncation({"a", "b", "c"}, 2); }

Semigroup markov_example() {
  return markov_semigroup({"x1", "x2"}, {{1, 1}, {1, 0}}, 3);
}

Semigroup group_zero_z2() {
  return adjoin_zero({"1", "g"}, {{"1", "g"}, {"g", "1"}});
}

Semigroup cat2() {
  // Objects A, B, C. s,t : B -> A; a1,a2,b1,b2 : C -> B.
  // Composites s.a1 = t.b1 = m1 and s.a2 = t.b2 = m2; every other product of
  // non-identity arrows is 0.
  struct Arrow {
    std::string name;
    char src, dst;
  };
  const std::vector<Arrow> arrows{{"1A", 'A', 'A'}, {"1B", 'B', 'B'}, {"1C", 'C', 'C'},
                                  {"s", 'B', 'A'},  {"t", 'B', 'A'},  {"a1", 'C', 'B'},
                                  {"a2", 'C', 'B'}, {"b1", 'C', 'B'}, {"b2", 'C', 'B'},
                                  {"m1", 'C', 'A'}, {"m2", 'C', 'A'}};
  std::vector<std::string> names{"0"};
  for (const auto& a : arrows) names.push_back(a.name);
  std::map<std::pair<std::string, std::string>, std::string> products;
  for (const auto& x : arrows)
    for (const auto& y : arrows) {
      if (x.src != y.dst) continue;
      if (x.name[0] == '1') products[{x.name, y.name}] = y.name;
      else if (y.name[0] == '1') products[{x.name, y.name}] = x.name;
    }
  products[{"s", "a1"}] = "m1";
  products[{"t", "b1"}] = "m1";
  products[{"s", "a2"}] = "m2";
  products[{"t", "b2"}] = "m2";
  return from_rule(names, products);
}

const std::vector<Named>& all() {
  static const std::vector<Named> list{
      {"trivial", trivial},       {"nilpotent", nilpotent},
      {"A", fixture_a},           {"B", fixture_b},
      {"no-lcm", no_lcm},         {"lang-ab", language_abaaba},
      {"words2", words_len2},     {"markov", markov_example},
      {"z2zero", group_zero_z2},  {"cat2", cat2},
  };
  return list;
}

Semigroup by_name(const std::string& name) {
  for (const auto& f : all())
    if (f.name == name) return f.make();
  throw Error(ErrorKind::Input, "unknown fixture '" + name + "'");
}

}  // namespace fixtures

}  // namespace ihull
