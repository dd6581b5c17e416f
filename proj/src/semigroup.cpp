#include "ihull/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace ihull {

ElemSet set_intersection(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

ElemSet set_union(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

ElemSet set_difference(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool set_contains(const ElemSet& a, Elem x) {
  return std::binary_search(a.begin(), a.end(), x);
}

bool set_subset(const ElemSet& a, const ElemSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ElemSet normalized(ElemSet a) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

Semigroup::Semigroup() { build_caches(); }

Semigroup Semigroup::validate(
    const std::vector<std::string>& names, const std::string& zero_name,
    const std::vector<std::vector<std::string>>& rows) {
  std::map<std::string, Elem> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], static_cast<Elem>(i)).second)
      throw Error(ErrorKind::Input, "duplicate element name '" + names[i] + "'");
  }
  auto z = index.find(zero_name);
  if (z == index.end())
    throw Error(ErrorKind::Input, "zero element '" + zero_name + "' not among the elements");
  const std::size_t n = names.size();
  if (rows.size() != n)
    throw Error(ErrorKind::Input, "table has " + std::to_string(rows.size()) +
                                      " rows, expected " + std::to_string(n));
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw Error(ErrorKind::Input, "table row " + std::to_string(i + 1) + " has " +
                                        std::to_string(rows[i].size()) + " entries, expected " +
                                        std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      auto it = index.find(rows[i][j]);
      if (it == index.end())
        throw Error(ErrorKind::Input, "unknown token '" + rows[i][j] + "' in table row " +
                                          std::to_string(i + 1));
      table[i * n + j] = it->second;
    }
  }
  return from_table(names, z->second, std::move(table));
}

Semigroup Semigroup::from_table(std::vector<std::string> names, Elem zero,
                                std::vector<Elem> table) {
  Semigroup S;
  S.n_ = static_cast<int>(names.size());
  const int n = S.n_;
  if (n == 0) throw Error(ErrorKind::Input, "empty element list");
  if (table.size() != static_cast<std::size_t>(n) * n)
    throw Error(ErrorKind::Input, "table size does not match element count");
  if (zero < 0 || zero >= n) throw Error(ErrorKind::Input, "zero id out of range");
  for (Elem v : table)
    if (v < 0 || v >= n) throw Error(ErrorKind::Input, "table entry out of range");
  S.names_ = std::move(names);
  S.zero_ = zero;
  S.table_ = std::move(table);
  {
    std::set<std::string> seen(S.names_.begin(), S.names_.end());
    if (seen.size() != S.names_.size())
      throw Error(ErrorKind::Input, "duplicate element name");
  }
  for (Elem s = 0; s < n; ++s) {
    if (S.mul(zero, s) != zero || S.mul(s, zero) != zero)
      throw Error(ErrorKind::Input, "zero is not absorbing: fails at '" + S.names_[s] + "'");
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem xy = S.mul(x, y);
      for (Elem z = 0; z < n; ++z) {
        if (S.mul(xy, z) != S.mul(x, S.mul(y, z)))
          throw Error(ErrorKind::Input, "associativity fails at (" + S.names_[x] + ", " +
                                            S.names_[y] + ", " + S.names_[z] + ")");
      }
    }
  for (Elem e = 0; e < n; ++e) {
    if (e == zero) continue;
    bool ok = true;
    for (Elem s = 0; s < n && ok; ++s)
      ok = S.mul(e, s) == s && S.mul(s, e) == s;
    if (ok) {
      S.unit_ = e;
      break;
    }
  }
  S.build_caches();
  return S;
}

void Semigroup::build_caches() {
  const int n = n_;
  div_.assign(static_cast<std::size_t>(n) * n, false);
  ideals_.assign(n, {});
  for (Elem s = 0; s < n; ++s) {
    ElemSet ideal;
    for (Elem u = 0; u < n; ++u) ideal.push_back(mul(s, u));
    ideals_[s] = normalized(std::move(ideal));
    div_[s * n + s] = true;
    for (Elem t : ideals_[s]) div_[s * n + t] = true;
  }
}

const std::string& Semigroup::name(Elem e) const { return names_.at(e); }

std::optional<Elem> Semigroup::find(const std::string& name) const {
  for (Elem i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Elem Semigroup::mul_tilde(Elem a, Elem b) const {
  if (a == kOne) return b;
  if (b == kOne) return a;
  return mul(a, b);
}

ElemSet Semigroup::nonzero() const {
  ElemSet out;
  for (Elem s = 0; s < n_; ++s)
    if (s != zero_) out.push_back(s);
  return out;
}

void Semigroup::set_words(std::vector<std::string> alphabet,
                          std::vector<std::vector<int>> words) {
  if (words.size() != static_cast<std::size_t>(n_))
    throw Error(ErrorKind::Internal, "word provenance size mismatch");
  alphabet_ = std::move(alphabet);
  words_ = std::move(words);
}

std::string Semigroup::render(Elem e) const {
  return e == kOne ? std::string("1*") : name(e);
}

std::string Semigroup::render(const ElemSet& set) const {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ",";
    out += render(set[i]);
  }
  return out + "}";
}

PropertyFlags property_flags(const Semigroup& S) {
  const int n = S.size();
  const Elem z = S.zero();
  PropertyFlags f;
  f.zero_left_cancellative = true;
  f.zero_right_cancellative = true;
  for (Elem s = 0; s < n; ++s)
    for (Elem t = 0; t < n; ++t)
      for (Elem r = t + 1; r < n; ++r) {
        Elem st = S.mul(s, t);
        if (st != z && st == S.mul(s, r)) f.zero_left_cancellative = false;
        Elem ts = S.mul(t, s);
        if (ts != z && ts == S.mul(r, s)) f.zero_right_cancellative = false;
      }
  f.categorical_at_zero = true;
  for (Elem r = 0; r < n && f.categorical_at_zero; ++r)
    for (Elem s = 0; s < n && f.categorical_at_zero; ++s) {
      Elem rs = S.mul(r, s);
      if (rs == z) continue;
      for (Elem t = 0; t < n; ++t) {
        if (S.mul(s, t) != z && S.mul(rs, t) == z) {
          f.categorical_at_zero = false;
          break;
        }
      }
    }
  f.right_reductive = true;
  for (Elem s = 0; s < n && f.right_reductive; ++s)
    for (Elem t = s + 1; t < n && f.right_reductive; ++t) {
      bool same = true;
      for (Elem x = 0; x < n && same; ++x) same = S.mul(s, x) == S.mul(t, x);
      if (same) f.right_reductive = false;
    }
  f.right_local_units = true;
  for (Elem s = 0; s < n && f.right_local_units; ++s) {
    if (s == z) continue;
    bool found = false;
    for (Elem e = 0; e < n && !found; ++e)
      found = is_idempotent(S, e) && S.mul(s, e) == s;
    f.right_local_units = found;
  }
  f.unital = S.unit().has_value();
  f.admits_lcms = admits_lcms(S);
  return f;
}

bool is_idempotent(const Semigroup& S, Elem s) { return S.mul(s, s) == s; }

bool in_square(const Semigroup& S, Elem s) {
  for (Elem x = 0; x < S.size(); ++x)
    for (Elem y = 0; y < S.size(); ++y)
      if (S.mul(x, y) == s) return true;
  return false;
}

ElementClass classify_element(const Semigroup& S, Elem s) {
  if (s == S.zero()) throw Error(ErrorKind::Precondition, "classify_element: s is zero");
  ElementClass c;
  c.idempotent = is_idempotent(S, s);
  c.prime = divisors(S, s) == ElemSet{s};
  c.irreducible = !in_square(S, s);
  bool annihilated = true;
  for (Elem x = 0; x < S.size() && annihilated; ++x) annihilated = S.mul(x, s) == S.zero();
  c.degenerate = c.irreducible && annihilated;
  if (set_contains(S.right_ideal(s), s)) {
    for (Elem e = 0; e < S.size(); ++e) {
      if (is_idempotent(S, e) && S.mul(s, e) == s) {
        c.right_unit = e;
        break;
      }
    }
  }
  return c;
}

ElemSet divisors(const Semigroup& S, Elem s) {
  ElemSet out;
  for (Elem t = 0; t < S.size(); ++t)
    if (t != S.zero() && S.divides(t, s)) out.push_back(t);
  return out;
}

bool divides(const Semigroup& S, Elem s, Elem t) { return S.divides(s, t); }

ElemSet all_lcms(const Semigroup& S, Elem s, Elem t) {
  ElemSet common = set_intersection(S.right_ideal(s), S.right_ideal(t));
  ElemSet out;
  for (Elem r = 0; r < S.size(); ++r)
    if (S.right_ideal(r) == common && S.divides(s, r) && S.divides(t, r)) out.push_back(r);
  return out;
}

std::optional<Elem> lcm(const Semigroup& S, Elem s, Elem t) {
  ElemSet all = all_lcms(S, s, t);
  if (all.empty()) return std::nullopt;
  return all.front();
}

bool admits_lcms(const Semigroup& S) {
  for (Elem s = 0; s < S.size(); ++s)
    for (Elem t = s; t < S.size(); ++t)
      if (!lcm(S, s, t)) return false;
  return true;
}

const char* to_string(Alignment::Kind kind) {
  switch (kind) {
    case Alignment::Kind::Principal: return "principal";
    case Alignment::Kind::Basis: return "basis";
    case Alignment::Kind::Generating: return "generating";
    case Alignment::Kind::None: return "none";
  }
  return "none";
}

ElemSet ideal_generated(const Semigroup& S, const ElemSet& B) {
  ElemSet out{S.zero()};
  for (Elem b : B) out = set_union(out, S.right_ideal(b));
  return out;
}

Alignment alignment(const Semigroup& S, Elem s, Elem t) {
  if (s == S.zero() || t == S.zero())
    throw Error(ErrorKind::Precondition, "alignment: arguments must be nonzero");
  Alignment a;
  if (auto r = lcm(S, s, t)) {
    a.kind = Alignment::Kind::Principal;
    a.witnesses = {*r};
    return a;
  }
  const ElemSet common = set_intersection(S.right_ideal(s), S.right_ideal(t));
  // Common multiples whose principal right ideal sits inside sS n tS and
  // contributes a nonzero element.
  ElemSet cand;
  for (Elem b = 0; b < S.size(); ++b) {
    if (b == S.zero() || !S.divides(s, b) || !S.divides(t, b)) continue;
    if (!set_subset(S.right_ideal(b), common)) continue;
    if (S.right_ideal(b).size() < 2) continue;
    cand.push_back(b);
  }
  if (ideal_generated(S, cand) != common) return a;

  // Exact cover of the nonzero part of sS n tS by pairwise disjoint bS.
  const ElemSet target = set_difference(common, {S.zero()});
  ElemSet chosen;
  ElemSet covered;
  std::function<bool()> search = [&]() -> bool {
    ElemSet left = set_difference(target, covered);
    if (left.empty()) return true;
    Elem need = left.front();
    for (Elem b : cand) {
      ElemSet part = set_difference(S.right_ideal(b), {S.zero()});
      if (!set_contains(part, need)) continue;
      if (!set_intersection(part, covered).empty()) continue;
      chosen.push_back(b);
      ElemSet saved = covered;
      covered = set_union(covered, part);
      if (search()) return true;
      covered = saved;
      chosen.pop_back();
    }
    return false;
  };
  if (search()) {
    a.kind = Alignment::Kind::Basis;
    a.witnesses = normalized(chosen);
    return a;
  }
  a.kind = Alignment::Kind::Generating;
  a.witnesses = cand;
  return a;
}

bool is_ideal(const Semigroup& S, const ElemSet& I) {
  if (!set_contains(I, S.zero())) return false;
  for (Elem i : I)
    for (Elem x = 0; x < S.size(); ++x)
      if (!set_contains(I, S.mul(i, x)) || !set_contains(I, S.mul(x, i))) return false;
  return true;
}

Semigroup rees_quotient(const Semigroup& S, const ElemSet& ideal) {
  ElemSet I = normalized(ideal);
  for (Elem i : I)
    if (i < 0 || i >= S.size()) throw Error(ErrorKind::Input, "rees_quotient: id out of range");
  if (!is_ideal(S, I)) throw Error(ErrorKind::Precondition, "rees_quotient: not an ideal containing 0");
  std::vector<Elem> keep;
  std::vector<Elem> remap(S.size(), -1);
  std::vector<std::string> names;
  Elem zero = -1;
  for (Elem s = 0; s < S.size(); ++s) {
    if (s == S.zero() || !set_contains(I, s)) {
      remap[s] = static_cast<Elem>(keep.size());
      if (s == S.zero()) zero = remap[s];
      keep.push_back(s);
      names.push_back(S.name(s));
    }
  }
  for (Elem s = 0; s < S.size(); ++s)
    if (remap[s] < 0) remap[s] = zero;
  const std::size_t m = keep.size();
  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = remap[S.mul(keep[i], keep[j])];
  Semigroup Q = Semigroup::from_table(std::move(names), zero, std::move(table));
  if (S.has_words()) {
    std::vector<std::vector<int>> words;
    for (Elem s : keep) words.push_back(S.word(s));
    Q.set_words(S.alphabet(), std::move(words));
  }
  return Q;
}

ElemSet essential_subset(const Semigroup& S) {
  ElemSet out;
  for (Elem x : S.nonzero()) {
    bool hit = false;
    for (Elem s = 0; s < S.size() && !hit; ++s)
      hit = S.mul(s, x) != S.zero() || set_contains(S.right_ideal(s), x);
    if (hit) out.push_back(x);
  }
  return out;
}

}  // namespace ihull
