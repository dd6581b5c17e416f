#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ihull/hull.hpp"
#include "ihull/semigroup.hpp"
#include "ihull/strings.hpp"

namespace ihull {

// Finite meet semilattice of sets, ordered as sort_sets orders them.
struct Semilattice {
  std::vector<ElemSet> members;
  std::vector<int> meet_table;  // k x k member indices
  int zero = 0;

  int size() const { return static_cast<int>(members.size()); }
  int meet(int x, int y) const { return meet_table[x * size() + y]; }
  bool leq(int x, int y) const { return meet(x, y) == x; }
  std::optional<int> index_of(const ElemSet& X) const;
  int at(const ElemSet& X) const;  // throws when X is not a member
  // Members strictly below x, including the zero.
  std::vector<int> strictly_below(int x) const;
};

// Needs an empty set among the members and closure under intersection.
Semilattice semilattice_from(std::vector<ElemSet> sets);
Semilattice semilattice_of(const Semigroup& S, std::size_t cap = kDefaultHullCap);

using Filter = std::vector<int>;        // sorted member indices
using Character = std::vector<bool>;    // one value per member

bool is_filter(const Semilattice& E, const Filter& xi);
bool is_character(const Semilattice& E, const Character& phi);
Character char_of(const Semilattice& E, const Filter& xi);
Filter filter_of(const Character& phi);
Filter principal_filter(const Semilattice& E, int e);
Filter up_closure(const Semilattice& E, const std::vector<int>& ids);

// Principal filters, one per nonzero member, in member order.
std::vector<Filter> filters(const Semilattice& E);
// Subset enumeration; refuses more than 16 nonzero members.
std::vector<Filter> filters_bruteforce(const Semilattice& E);

// e not in xi implies ef = 0 for some f in xi.
bool is_ultra(const Semilattice& E, const Filter& xi);
bool is_ultra_by_maximality(const Semilattice& E, const Filter& xi);
std::vector<Filter> ultrafilters(const Semilattice& E);
bool char_leq(const Character& a, const Character& b);

inline constexpr int kDefaultMaxCover = 20;

bool is_cover_of(const Semilattice& E, const std::vector<int>& Z, int x);
// Reduced per-element criterion. Lower sets above max_cover raise a budget error.
bool is_tight(const Semilattice& E, const Character& phi, int max_cover = kDefaultMaxCover);
// Covers of every E^{X,Y} with |X| <= 1; refuses more than 8 members.
bool is_tight_bruteforce(const Semilattice& E, const Character& phi);

struct SetRepresentation {
  int ambient = 0;  // Omega = {0, ..., ambient - 1}
  std::vector<ElemSet> image;  // per member
};

SetRepresentation identity_representation(const Semilattice& E, int ambient);
// X -> epsilon(X) as a set of indices into the given string list.
SetRepresentation epsilon_representation(const Semigroup& S, const Semilattice& E,
                                          const std::vector<StringSet>& strings);
bool is_representation(const Semilattice& E, const SetRepresentation& pi);

// Atoms of the generated set algebra, each as a set of ambient points.
std::vector<ElemSet> representation_atoms(const SetRepresentation& pi);
// Same atoms by literal closure under intersection and relative complement.
std::vector<ElemSet> representation_atoms_by_closure(const SetRepresentation& pi);
std::vector<Character> pi_tight_characters(const Semilattice& E, const SetRepresentation& pi);
// Joins of at most join_bound members below x; -1 means no bound.
bool is_pi_tight(const Semilattice& E, const SetRepresentation& pi, const Character& phi,
                 int join_bound = -1);

// Everything about one semigroup that the character machinery reads.
struct Spectrum {
  Semilattice E;
  std::vector<StringSet> strings;  // S*
  std::vector<int> E_index;        // member index of E_s, per element
  std::vector<int> F_index;        // member index of F_s, per element
};

Spectrum spectrum_of(const Semigroup& S, std::size_t cap = kDefaultHullCap);

Character phi_from_string(const Semigroup& S, const Spectrum& sp, const StringSet& sigma);
ElemSet sigma_from_char(const Semigroup& S, const Spectrum& sp, const Character& phi);

struct CharacterClass {
  bool ground = false;
  bool open = false;
  bool in_E1hat = false;
};
CharacterClass classify_character(const Semigroup& S, const Spectrum& sp, const Character& phi);
bool e1_membership(const Semigroup& S, const ElemSet& X);
std::vector<int> e1_ideal(const Semigroup& S, const Spectrum& sp);

Character dual_theta(const Semigroup& S, const Spectrum& sp, Elem s, const Character& phi);
Character dual_theta_inv(const Semigroup& S, const Spectrum& sp, Elem s, const Character& phi);
bool in_F_hat(const Spectrum& sp, Elem s, const Character& phi);
bool in_E_hat(const Spectrum& sp, Elem s, const Character& phi);

struct Decomposition {
  Elem u = kOne;
  Character ground;
};
Decomposition nonopen_decomposition(const Semigroup& S, const Spectrum& sp, const Character& phi);

struct OpenUltra {
  StringSet sigma;
  Character phi;
};
struct NonOpenUltra {
  Elem u = kOne;
  Character ground;
  Character phi;  // dual_theta(u, ground)
};
struct Census {
  std::vector<Character> ultras;
  std::vector<OpenUltra> open;
  std::vector<NonOpenUltra> nonopen;
  std::vector<StringSet> quasi_maximal;
};
Census ultra_census(const Semigroup& S, const Spectrum& sp);

struct IdealRestriction {
  std::vector<Filter> j_filters;  // filters of J, as member indices of E
  std::vector<Filter> U;          // filters of E meeting J
  std::vector<Filter> extended;   // upward closure of each j_filter
};
bool is_semilattice_ideal(const Semilattice& E, const std::vector<int>& J);
IdealRestriction ideal_restriction(const Semilattice& E, const std::vector<int>& J);
Filter restrict_filter(const Filter& xi, const std::vector<int>& J);

}  // namespace ihull
