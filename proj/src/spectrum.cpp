#include "ihull/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace ihull {

std::optional<int> Semilattice::index_of(const ElemSet& X) const {
  auto it = std::find(members.begin(), members.end(), X);
  if (it == members.end()) return std::nullopt;
  return static_cast<int>(it - members.begin());
}

int Semilattice::at(const ElemSet& X) const {
  auto i = index_of(X);
  if (!i) throw Error(ErrorKind::Internal, "set is not a member of the semilattice");
  return *i;
}

std::vector<int> Semilattice::strictly_below(int x) const {
  std::vector<int> out;
  for (int y = 0; y < size(); ++y)
    if (y != x && leq(y, x)) out.push_back(y);
  return out;
}

Semilattice semilattice_from(std::vector<ElemSet> sets) {
  Semilattice E;
  E.members = sort_sets(std::move(sets));
  auto zero = E.index_of({});
  if (!zero) throw Error(ErrorKind::Precondition, "semilattice needs the empty set");
  E.zero = *zero;
  const int k = E.size();
  E.meet_table.assign(static_cast<std::size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      auto m = E.index_of(set_intersection(E.members[i], E.members[j]));
      if (!m) throw Error(ErrorKind::Precondition, "family is not closed under intersection");
      E.meet_table[i * k + j] = *m;
    }
  return E;
}

Semilattice semilattice_of(const Semigroup& S, std::size_t cap) {
  return semilattice_from(constructible_sets(S, cap));
}

bool is_filter(const Semilattice& E, const Filter& xi) {
  if (xi.empty() || set_contains(xi, E.zero)) return false;
  for (int x : xi)
    for (int y : xi)
      if (!set_contains(xi, E.meet(x, y))) return false;
  for (int x : xi)
    for (int y = 0; y < E.size(); ++y)
      if (E.leq(x, y) && !set_contains(xi, y)) return false;
  return true;
}

bool is_character(const Semilattice& E, const Character& phi) {
  if (static_cast<int>(phi.size()) != E.size() || phi[E.zero]) return false;
  if (std::none_of(phi.begin(), phi.end(), [](bool b) { return b; })) return false;
  for (int x = 0; x < E.size(); ++x)
    for (int y = 0; y < E.size(); ++y)
      if (phi[E.meet(x, y)] != (phi[x] && phi[y])) return false;
  return true;
}

Character char_of(const Semilattice& E, const Filter& xi) {
  Character phi(E.size(), false);
  for (int x : xi) phi[x] = true;
  return phi;
}

Filter filter_of(const Character& phi) {
  Filter xi;
  for (std::size_t i = 0; i < phi.size(); ++i)
    if (phi[i]) xi.push_back(static_cast<int>(i));
  return xi;
}

Filter principal_filter(const Semilattice& E, int e) {
  Filter xi;
  for (int y = 0; y < E.size(); ++y)
    if (E.leq(e, y)) xi.push_back(y);
  return xi;
}

Filter up_closure(const Semilattice& E, const std::vector<int>& ids) {
  Filter xi;
  for (int y = 0; y < E.size(); ++y)
    if (std::any_of(ids.begin(), ids.end(), [&](int x) { return E.leq(x, y); })) xi.push_back(y);
  return xi;
}

std::vector<Filter> filters(const Semilattice& E) {
  std::vector<Filter> out;
  for (int e = 0; e < E.size(); ++e)
    if (e != E.zero) out.push_back(principal_filter(E, e));
  return out;
}

std::vector<Filter> filters_bruteforce(const Semilattice& E) {
  std::vector<int> nz;
  for (int e = 0; e < E.size(); ++e)
    if (e != E.zero) nz.push_back(e);
  if (nz.size() > 16) throw Error(ErrorKind::Budget, "filter enumeration needs at most 16 members");
  std::vector<Filter> out;
  for (unsigned mask = 1; mask < (1u << nz.size()); ++mask) {
    Filter xi;
    for (std::size_t i = 0; i < nz.size(); ++i)
      if (mask & (1u << i)) xi.push_back(nz[i]);
    if (is_filter(E, xi)) out.push_back(std::move(xi));
  }
  return out;
}

bool is_ultra(const Semilattice& E, const Filter& xi) {
  for (int e = 0; e < E.size(); ++e) {
    if (set_contains(xi, e)) continue;
    bool killed = std::any_of(xi.begin(), xi.end(), [&](int f) { return E.meet(e, f) == E.zero; });
    if (!killed) return false;
  }
  return true;
}

bool is_ultra_by_maximality(const Semilattice& E, const Filter& xi) {
  for (const auto& eta : filters(E))
    if (eta != xi && set_subset(xi, eta)) return false;
  return true;
}

std::vector<Filter> ultrafilters(const Semilattice& E) {
  std::vector<Filter> out;
  for (const auto& xi : filters(E))
    if (is_ultra(E, xi)) out.push_back(xi);
  return out;
}

bool char_leq(const Character& a, const Character& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

bool is_cover_of(const Semilattice& E, const std::vector<int>& Z, int x) {
  for (int y = 0; y < E.size(); ++y) {
    if (y == E.zero || !E.leq(y, x)) continue;
    bool meets = std::any_of(Z.begin(), Z.end(), [&](int z) { return E.meet(y, z) != E.zero; });
    if (!meets) return false;
  }
  return true;
}

bool is_tight(const Semilattice& E, const Character& phi, int max_cover) {
  for (int x = 0; x < E.size(); ++x) {
    const auto below = E.strictly_below(x);
    if (static_cast<int>(below.size()) + 1 > max_cover)
      throw Error(ErrorKind::Budget, "lower set of size " + std::to_string(below.size() + 1) +
                                         " exceeds the cover budget " + std::to_string(max_cover));
    if (!phi[x]) continue;
    // Covers only grow under enlargement, so the largest cover with
    // join 0 is the one to test.
    std::vector<int> Z0;
    for (int z : below)
      if (!phi[z]) Z0.push_back(z);
    if (is_cover_of(E, Z0, x)) return false;
  }
  return true;
}

bool is_tight_bruteforce(const Semilattice& E, const Character& phi) {
  const int k = E.size();
  if (k > 8) throw Error(ErrorKind::Budget, "brute-force tightness needs at most 8 members");
  for (int x = -1; x < k; ++x) {
    const bool px = x < 0 || phi[x];
    for (unsigned ymask = 0; ymask < (1u << k); ++ymask) {
      bool rhs = px;
      std::vector<int> cone;
      for (int z = 0; z < k; ++z) {
        if (x >= 0 && !E.leq(z, x)) continue;
        bool orth = true;
        for (int y = 0; y < k; ++y)
          if ((ymask & (1u << y)) && E.meet(z, y) != E.zero) orth = false;
        if (orth) cone.push_back(z);
      }
      for (int y = 0; y < k; ++y)
        if ((ymask & (1u << y)) && phi[y]) rhs = false;
      if (!rhs) continue;
      for (unsigned zmask = 0; zmask < (1u << cone.size()); ++zmask) {
        std::vector<int> Z;
        for (std::size_t i = 0; i < cone.size(); ++i)
          if (zmask & (1u << i)) Z.push_back(cone[i]);
        bool covers = true;
        for (int w : cone) {
          if (w == E.zero) continue;
          if (std::none_of(Z.begin(), Z.end(), [&](int z) { return E.meet(w, z) != E.zero; }))
            covers = false;
        }
        if (!covers) continue;
        if (std::none_of(Z.begin(), Z.end(), [&](int z) { return phi[z]; })) return false;
      }
    }
  }
  return true;
}

SetRepresentation identity_representation(const Semilattice& E, int ambient) {
  return {ambient, E.members};
}

SetRepresentation epsilon_representation(const Semigroup& S, const Semilattice& E,
                                          const std::vector<StringSet>& strings) {
  SetRepresentation pi;
  pi.ambient = static_cast<int>(strings.size());
  for (const auto& X : E.members) {
    ElemSet image;
    for (std::size_t i = 0; i < strings.size(); ++i)
      if (asymptotically_contained(S, strings[i], X)) image.push_back(static_cast<int>(i));
    pi.image.push_back(std::move(image));
  }
  return pi;
}

bool is_representation(const Semilattice& E, const SetRepresentation& pi) {
  if (static_cast<int>(pi.image.size()) != E.size() || !pi.image[E.zero].empty()) return false;
  for (int x = 0; x < E.size(); ++x)
    for (int y = 0; y < E.size(); ++y)
      if (pi.image[E.meet(x, y)] != set_intersection(pi.image[x], pi.image[y])) return false;
  return true;
}

std::vector<ElemSet> representation_atoms(const SetRepresentation& pi) {
  // Points with the same membership signature form one atom.
  std::map<std::vector<bool>, ElemSet> classes;
  for (int w = 0; w < pi.ambient; ++w) {
    std::vector<bool> sig;
    bool seen = false;
    for (const auto& img : pi.image) {
      sig.push_back(set_contains(img, w));
      seen = seen || sig.back();
    }
    if (seen) classes[sig].push_back(w);
  }
  std::vector<ElemSet> atoms;
  for (auto& [sig, pts] : classes) atoms.push_back(pts);
  std::sort(atoms.begin(), atoms.end(),
            [](const ElemSet& a, const ElemSet& b) { return a.front() < b.front(); });
  return atoms;
}

std::vector<ElemSet> representation_atoms_by_closure(const SetRepresentation& pi) {
  std::set<ElemSet> algebra(pi.image.begin(), pi.image.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ElemSet> current(algebra.begin(), algebra.end());
    for (const auto& a : current)
      for (const auto& b : current)
        for (auto c : {set_intersection(a, b), set_difference(a, b)})
          if (algebra.insert(c).second) grew = true;
  }
  std::vector<ElemSet> atoms;
  for (const auto& a : algebra) {
    if (a.empty()) continue;
    bool minimal = std::none_of(algebra.begin(), algebra.end(), [&](const ElemSet& b) {
      return !b.empty() && b != a && set_subset(b, a);
    });
    if (minimal) atoms.push_back(a);
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const ElemSet& a, const ElemSet& b) { return a.front() < b.front(); });
  return atoms;
}

std::vector<Character> pi_tight_characters(const Semilattice& E, const SetRepresentation& pi) {
  std::vector<Character> out;
  for (const auto& atom : representation_atoms(pi)) {
    const Elem w = atom.front();
    Character phi(E.size(), false);
    for (int x = 0; x < E.size(); ++x) phi[x] = set_contains(pi.image[x], w);
    if (std::find(out.begin(), out.end(), phi) == out.end()) out.push_back(std::move(phi));
  }
  return out;
}

bool is_pi_tight(const Semilattice& E, const SetRepresentation& pi, const Character& phi,
                 int join_bound) {
  for (int x = 0; x < E.size(); ++x) {
    if (!phi[x]) continue;
    const auto below = E.strictly_below(x);
    if (below.size() > 20) throw Error(ErrorKind::Budget, "lower set too large for join enumeration");
    const int bound = join_bound < 0 ? static_cast<int>(below.size()) : join_bound;
    for (unsigned mask = 1; mask < (1u << below.size()); ++mask) {
      if (std::popcount(mask) > bound) continue;
      ElemSet join;
      bool hit = false;
      for (std::size_t i = 0; i < below.size(); ++i)
        if (mask & (1u << i)) {
          join = set_union(join, pi.image[below[i]]);
          hit = hit || phi[below[i]];
        }
      if (set_subset(pi.image[x], join) && !hit) return false;
    }
  }
  return true;
}

Spectrum spectrum_of(const Semigroup& S, std::size_t cap) {
  Spectrum sp;
  sp.E = semilattice_of(S, cap);
  sp.strings = all_strings(S);
  for (Elem s = 0; s < S.size(); ++s) {
    sp.E_index.push_back(sp.E.at(E_set(S, s)));
    sp.F_index.push_back(sp.E.at(F_set(S, s)));
  }
  return sp;
}

Character phi_from_string(const Semigroup& S, const Spectrum& sp, const StringSet& sigma) {
  if (!is_string(S, sigma)) throw Error(ErrorKind::Precondition, S.render(sigma) + " is not a string");
  if (is_degenerate_string(S, sigma))
    throw Error(ErrorKind::Precondition, "string " + S.render(sigma) + " is degenerate");
  Character phi(sp.E.size(), false);
  for (int x = 0; x < sp.E.size(); ++x)
    phi[x] = asymptotically_contained(S, sigma, sp.E.members[x]);
  return phi;
}

ElemSet sigma_from_char(const Semigroup& S, const Spectrum& sp, const Character& phi) {
  ElemSet out;
  for (Elem s = 0; s < S.size(); ++s)
    if (phi[sp.E_index[s]]) out.push_back(s);
  return out;
}

CharacterClass classify_character(const Semigroup& S, const Spectrum& sp, const Character& phi) {
  CharacterClass c;
  const ElemSet sigma = sigma_from_char(S, sp, phi);
  c.ground = sigma.empty();
  c.in_E1hat = !c.ground;
  c.open = !c.ground && is_open(S, sigma);
  return c;
}

bool e1_membership(const Semigroup& S, const ElemSet& X) {
  for (Elem s = 0; s < S.size(); ++s)
    if (set_subset(X, E_set(S, s))) return true;
  return false;
}

std::vector<int> e1_ideal(const Semigroup& S, const Spectrum& sp) {
  std::vector<int> out;
  for (int x = 0; x < sp.E.size(); ++x)
    if (e1_membership(S, sp.E.members[x])) out.push_back(x);
  return out;
}

bool in_F_hat(const Spectrum& sp, Elem s, const Character& phi) { return phi[sp.F_index[s]]; }
bool in_E_hat(const Spectrum& sp, Elem s, const Character& phi) { return phi[sp.E_index[s]]; }

Character dual_theta(const Semigroup& S, const Spectrum& sp, Elem s, const Character& phi) {
  if (!in_F_hat(sp, s, phi))
    throw Error(ErrorKind::Precondition, "character is outside the domain of the dual of " + S.name(s));
  Character out(sp.E.size(), false);
  for (int x = 0; x < sp.E.size(); ++x)
    out[x] = phi[sp.E.at(backward_image(S, s, sp.E.members[x]))];
  return out;
}

Character dual_theta_inv(const Semigroup& S, const Spectrum& sp, Elem s, const Character& phi) {
  if (!in_E_hat(sp, s, phi))
    throw Error(ErrorKind::Precondition, "character is outside the range of the dual of " + S.name(s));
  Character out(sp.E.size(), false);
  for (int x = 0; x < sp.E.size(); ++x)
    out[x] = phi[sp.E.at(forward_image(S, s, sp.E.members[x]))];
  return out;
}

Decomposition nonopen_decomposition(const Semigroup& S, const Spectrum& sp, const Character& phi) {
  const CharacterClass c = classify_character(S, sp, phi);
  if (c.open) throw Error(ErrorKind::Precondition, "character is open");
  if (c.ground) return {kOne, phi};
  const ElemSet sigma = sigma_from_char(S, sp, phi);
  for (Elem r : sigma) {
    if (divisors(S, r) != sigma || set_contains(S.right_ideal(r), r)) continue;
    Character ground = dual_theta_inv(S, sp, r, phi);
    if (!classify_character(S, sp, ground).ground)
      throw Error(ErrorKind::Internal, "pulled-back character is not ground");
    return {r, std::move(ground)};
  }
  throw Error(ErrorKind::Internal, "non-open string has no generator outside its own right ideal");
}

Census ultra_census(const Semigroup& S, const Spectrum& sp) {
  if (!admits_lcms(S)) throw Error(ErrorKind::Precondition, "semigroup does not admit least common multiples");
  Census census;
  for (const auto& xi : ultrafilters(sp.E)) {
    Character phi = char_of(sp.E, xi);
    census.ultras.push_back(phi);
    const CharacterClass c = classify_character(S, sp, phi);
    if (c.open) {
      census.open.push_back({sigma_from_char(S, sp, phi), phi});
    } else {
      Decomposition d = nonopen_decomposition(S, sp, phi);
      census.nonopen.push_back({d.u, std::move(d.ground), std::move(phi)});
    }
  }
  for (const auto& sigma : sp.strings) {
    if (is_degenerate_string(S, sigma)) continue;
    Character phi = phi_from_string(S, sp, sigma);
    if (is_ultra(sp.E, filter_of(phi))) census.quasi_maximal.push_back(sigma);
  }
  return census;
}

bool is_semilattice_ideal(const Semilattice& E, const std::vector<int>& J) {
  if (!set_contains(J, E.zero)) return false;
  for (int j : J)
    for (int x = 0; x < E.size(); ++x)
      if (!set_contains(J, E.meet(j, x))) return false;
  return true;
}

Filter restrict_filter(const Filter& xi, const std::vector<int>& J) { return set_intersection(xi, J); }

IdealRestriction ideal_restriction(const Semilattice& E, const std::vector<int>& J) {
  if (!is_semilattice_ideal(E, J)) throw Error(ErrorKind::Precondition, "set is not an ideal of the semilattice");
  IdealRestriction out;
  for (int e : J) {
    if (e == E.zero) continue;
    out.j_filters.push_back(restrict_filter(principal_filter(E, e), J));
    out.extended.push_back(up_closure(E, out.j_filters.back()));
  }
  for (const auto& xi : filters(E))
    if (!restrict_filter(xi, J).empty()) out.U.push_back(xi);
  return out;
}

}  // namespace ihull
