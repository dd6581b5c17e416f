#pragma once

#include <string>
#include <vector>

#include "ihull/semigroup.hpp"

namespace ihull {

enum class LanguageMode { Validate, Close };

// Splits a word into alphabet tokens, longest token first.
std::vector<int> tokenize_word(const std::vector<std::string>& alphabet,
                               const std::string& word);

// S = L u {0}, product is concatenation when it stays in L.
// Elements are ordered by length, then by alphabet position.
Semigroup language_semigroup(const std::vector<std::string>& alphabet,
                             const std::vector<std::vector<int>>& words,
                             LanguageMode mode);
Semigroup language_semigroup(const std::vector<std::string>& alphabet,
                             const std::vector<std::string>& words,
                             LanguageMode mode);

// All words of length <= max_len over the alphabet (no language filter),
// with overlong products sent to zero.
Semigroup word_truncation(const std::vector<std::string>& alphabet, int max_len);

std::vector<std::vector<int>> factor_closure(const std::vector<std::vector<int>>& words);

Semigroup markov_semigroup(const std::vector<std::string>& alphabet,
                           const std::vector<std::vector<int>>& matrix,
                           int max_len);

// Input must be a monoid; a new element named "0" is appended.
Semigroup adjoin_zero(const std::vector<std::string>& names,
                      const std::vector<std::vector<std::string>>& rows);

namespace fixtures {

Semigroup trivial();        // {0}
Semigroup nilpotent();      // {0,x}, x^2 = 0
Semigroup fixture_a();      // {0,1,a,aa}, a^3 = 0
Semigroup fixture_b();      // {0,e,s}
Semigroup no_lcm();         // {a,b,c,ab,ba,c2,0}, ac = bc = c2
Semigroup language_abaaba();  // L = {a,b,aa,ba}
Semigroup words_len2();     // all words of length <= 2 over {a,b,c}
Semigroup markov_example(); // A = [[1,1],[1,0]], words up to length 3
Semigroup group_zero_z2();  // Z/2 with zero adjoined
Semigroup cat2();           // two-arrow category semigroup

struct Named {
  std::string name;
  Semigroup (*make)();
};
const std::vector<Named>& all();
Semigroup by_name(const std::string& name);

}  // namespace fixtures

}  // namespace ihull
