#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ihull {

using Elem = int;
using ElemSet = std::vector<Elem>;  // sorted, no repeats

// Marker for the external unit of S~ = S u {1}. Never stored in a table.
inline constexpr Elem kOne = -1;

enum class ErrorKind { Input, Precondition, Cap, Budget, Verify, Internal };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

class Semigroup {
public:
  // The trivial semigroup {0}.
  Semigroup();

  // Checks names, zero absorption and associativity.
  static Semigroup validate(const std::vector<std::string>& names,
                            const std::string& zero_name,
                            const std::vector<std::vector<std::string>>& rows);
  static Semigroup from_table(std::vector<std::string> names, Elem zero,
                              std::vector<Elem> table);

  int size() const { return n_; }
  Elem zero() const { return zero_; }
  std::optional<Elem> unit() const { return unit_; }
  const std::string& name(Elem e) const;
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Elem> find(const std::string& name) const;

  Elem mul(Elem a, Elem b) const { return table_[a * n_ + b]; }
  // Product in S~; kOne acts as a two-sided identity.
  Elem mul_tilde(Elem a, Elem b) const;

  bool divides(Elem s, Elem t) const { return div_[s * n_ + t]; }
  // sS, always containing 0.
  const ElemSet& right_ideal(Elem s) const { return ideals_[s]; }
  ElemSet nonzero() const;

  // Word provenance for semigroups built from languages.
  bool has_words() const { return !words_.empty(); }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<int>& word(Elem e) const { return words_.at(e); }
  void set_words(std::vector<std::string> alphabet,
                 std::vector<std::vector<int>> words);

  std::string render(Elem e) const;  // names, with kOne as "1*"
  std::string render(const ElemSet& set) const;

private:
  void build_caches();

  int n_ = 1;
  Elem zero_ = 0;
  std::vector<std::string> names_{"0"};
  std::vector<Elem> table_{0};
  std::optional<Elem> unit_;
  std::vector<bool> div_;
  std::vector<ElemSet> ideals_;
  std::vector<std::string> alphabet_;
  std::vector<std::vector<int>> words_;
};

struct PropertyFlags {
  bool zero_left_cancellative = false;
  bool zero_right_cancellative = false;
  bool categorical_at_zero = false;
  bool right_reductive = false;
  bool right_local_units = false;
  bool unital = false;
  bool admits_lcms = false;
};

PropertyFlags property_flags(const Semigroup& S);

struct ElementClass {
  bool idempotent = false;
  bool prime = false;
  bool irreducible = false;
  bool degenerate = false;
  std::optional<Elem> right_unit;  // s+
};

ElementClass classify_element(const Semigroup& S, Elem s);

ElemSet divisors(const Semigroup& S, Elem s);
bool divides(const Semigroup& S, Elem s, Elem t);
bool in_square(const Semigroup& S, Elem s);  // s in S^2
bool is_idempotent(const Semigroup& S, Elem s);

std::optional<Elem> lcm(const Semigroup& S, Elem s, Elem t);
// Every r with sS n tS = rS and s|r, t|r.
ElemSet all_lcms(const Semigroup& S, Elem s, Elem t);
bool admits_lcms(const Semigroup& S);

struct Alignment {
  enum class Kind { Principal, Basis, Generating, None };
  Kind kind = Kind::None;
  ElemSet witnesses;
};

const char* to_string(Alignment::Kind kind);
Alignment alignment(const Semigroup& S, Elem s, Elem t);

// Union of bS over b in B, with the empty union read as {0}.
ElemSet ideal_generated(const Semigroup& S, const ElemSet& B);

Semigroup rees_quotient(const Semigroup& S, const ElemSet& ideal);
bool is_ideal(const Semigroup& S, const ElemSet& I);

// Union of all F_s and E_s.
ElemSet essential_subset(const Semigroup& S);

// Small set helpers shared across modules.
ElemSet set_intersection(const ElemSet& a, const ElemSet& b);
ElemSet set_union(const ElemSet& a, const ElemSet& b);
ElemSet set_difference(const ElemSet& a, const ElemSet& b);
bool set_contains(const ElemSet& a, Elem x);
bool set_subset(const ElemSet& a, const ElemSet& b);
ElemSet normalized(ElemSet a);

}  // namespace ihull
