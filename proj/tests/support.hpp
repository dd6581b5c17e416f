#pragma once

// Corpus and brute-force oracles shared by the test binaries. The oracles
// read only multiplication tables, never library caches.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ihull/constructors.hpp"
#include "ihull/semigroup.hpp"

namespace support {

using ihull::Elem;
using ihull::ElemSet;
using ihull::Semigroup;

struct Case {
  std::string name;
  Semigroup S;
};

// Random factor-closed languages over {a,b} or {a,b,c}, words up to length 3.
inline std::vector<Case> random_languages(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Case> out;
  for (int k = 0; k < count; ++k) {
    const int letters = 2 + static_cast<int>(rng() % 2);
    std::vector<std::string> alphabet{"a", "b", "c"};
    alphabet.resize(letters);
    std::vector<std::vector<int>> words;
    const int picks = 1 + static_cast<int>(rng() % 4);
    for (int p = 0; p < picks; ++p) {
      std::vector<int> w(1 + rng() % 3);
      for (int& c : w) c = static_cast<int>(rng() % letters);
      words.push_back(w);
    }
    out.push_back({"random-language-" + std::to_string(k),
                   ihull::language_semigroup(alphabet, words, ihull::LanguageMode::Close)});
  }
  return out;
}

inline std::vector<Case> random_markov(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Case> out;
  for (int k = 0; k < count; ++k) {
    std::vector<std::vector<int>> A(2, std::vector<int>(2));
    for (auto& row : A)
      for (int& x : row) x = static_cast<int>(rng() % 2);
    out.push_back({"random-markov-" + std::to_string(k),
                   ihull::markov_semigroup({"x", "y"}, A, 2 + static_cast<int>(rng() % 2))});
  }
  return out;
}

inline std::vector<Case> fixtures() {
  std::vector<Case> out;
  for (const auto& f : ihull::fixtures::all()) out.push_back({f.name, f.make()});
  return out;
}

inline std::vector<Case> corpus() {
  auto out = fixtures();
  for (auto& c : random_languages(12, 7)) out.push_back(std::move(c));
  for (auto& c : random_markov(4, 11)) out.push_back(std::move(c));
  return out;
}

// ---- oracles ---------------------------------------------------------------

inline bool oracle_associative(const Semigroup& S) {
  for (Elem x = 0; x < S.size(); ++x)
    for (Elem y = 0; y < S.size(); ++y)
      for (Elem z = 0; z < S.size(); ++z)
        if (S.mul(S.mul(x, y), z) != S.mul(x, S.mul(y, z))) return false;
  return true;
}

inline ElemSet oracle_right_ideal(const Semigroup& S, Elem s) {
  std::set<Elem> out;
  for (Elem u = 0; u < S.size(); ++u) out.insert(S.mul(s, u));
  return {out.begin(), out.end()};
}

inline bool oracle_divides(const Semigroup& S, Elem s, Elem t) {
  if (s == t) return true;
  for (Elem u = 0; u < S.size(); ++u)
    if (S.mul(s, u) == t) return true;
  return false;
}

inline ElemSet oracle_divisors(const Semigroup& S, Elem s) {
  ElemSet out;
  for (Elem t = 0; t < S.size(); ++t)
    if (t != S.zero() && oracle_divides(S, t, s)) out.push_back(t);
  return out;
}

inline ElemSet oracle_lcms(const Semigroup& S, Elem s, Elem t) {
  ElemSet I, a = oracle_right_ideal(S, s), b = oracle_right_ideal(S, t);
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(I));
  ElemSet out;
  for (Elem r = 0; r < S.size(); ++r)
    if (oracle_right_ideal(S, r) == I && oracle_divides(S, s, r) && oracle_divides(S, t, r))
      out.push_back(r);
  return out;
}

inline bool oracle_zero_left_cancellative(const Semigroup& S) {
  for (Elem s = 0; s < S.size(); ++s)
    for (Elem t = 0; t < S.size(); ++t)
      for (Elem r = 0; r < S.size(); ++r)
        if (t != r && S.mul(s, t) != S.zero() && S.mul(s, t) == S.mul(s, r)) return false;
  return true;
}

inline bool oracle_categorical_at_zero(const Semigroup& S) {
  for (Elem r = 0; r < S.size(); ++r)
    for (Elem s = 0; s < S.size(); ++s)
      for (Elem t = 0; t < S.size(); ++t)
        if (S.mul(r, s) != S.zero() && S.mul(s, t) != S.zero() &&
            S.mul(S.mul(r, s), t) == S.zero())
          return false;
  return true;
}

// Partial maps as std::map, composed the textbook way.
using PMap = std::map<Elem, Elem>;

inline PMap oracle_theta(const Semigroup& S, Elem s) {
  PMap m;
  for (Elem x = 0; x < S.size(); ++x)
    if (x != S.zero() && S.mul(s, x) != S.zero()) m[x] = S.mul(s, x);
  return m;
}

inline PMap oracle_compose(const PMap& f, const PMap& g) {
  PMap out;
  for (auto [x, y] : g) {
    auto it = f.find(y);
    if (it != f.end()) out[x] = it->second;
  }
  return out;
}

inline PMap oracle_invert(const PMap& f) {
  PMap out;
  for (auto [x, y] : f) out[y] = x;
  return out;
}

// Naive saturation: repeat all pairwise products until nothing new appears.
inline std::set<PMap> oracle_hull(const Semigroup& S) {
  std::set<PMap> H;
  for (Elem s = 0; s < S.size(); ++s) {
    H.insert(oracle_theta(S, s));
    H.insert(oracle_invert(oracle_theta(S, s)));
  }
  for (;;) {
    std::vector<PMap> cur(H.begin(), H.end());
    std::size_t before = H.size();
    for (const auto& f : cur)
      for (const auto& g : cur) H.insert(oracle_compose(f, g));
    if (H.size() == before) return H;
  }
}

inline std::vector<ElemSet> oracle_constructible(const Semigroup& S) {
  std::set<ElemSet> out;
  for (const auto& f : oracle_hull(S)) {
    bool idem = std::all_of(f.begin(), f.end(), [](auto kv) { return kv.first == kv.second; });
    if (!idem) continue;
    ElemSet dom;
    for (auto [x, y] : f) dom.push_back(x);
    out.insert(dom);
  }
  return {out.begin(), out.end()};
}

inline bool oracle_is_string(const Semigroup& S, const ElemSet& A) {
  if (A.empty() || std::count(A.begin(), A.end(), S.zero())) return false;
  auto in = [&](Elem x) { return std::count(A.begin(), A.end(), x) > 0; };
  for (Elem a : A)
    for (Elem t : oracle_divisors(S, a))
      if (!in(t)) return false;
  for (Elem a : A)
    for (Elem b : A) {
      bool ok = false;
      for (Elem c : A) ok = ok || (oracle_divides(S, a, c) && oracle_divides(S, b, c));
      if (!ok) return false;
    }
  return true;
}

inline std::set<ElemSet> oracle_strings(const Semigroup& S) {
  ElemSet nz;
  for (Elem x = 0; x < S.size(); ++x)
    if (x != S.zero()) nz.push_back(x);
  std::set<ElemSet> out;
  for (unsigned m = 1; m < (1u << nz.size()); ++m) {
    ElemSet A;
    for (std::size_t i = 0; i < nz.size(); ++i)
      if (m & (1u << i)) A.push_back(nz[i]);
    if (oracle_is_string(S, A)) out.insert(A);
  }
  return out;
}

inline ElemSet names_to_set(const Semigroup& S, const std::vector<std::string>& names) {
  ElemSet out;
  for (const auto& n : names) out.push_back(*S.find(n));
  std::sort(out.begin(), out.end());
  return out;
}

inline Elem id(const Semigroup& S, const std::string& name) { return *S.find(name); }

}  // namespace support
