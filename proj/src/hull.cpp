#include "ihull/hull.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ihull {

bool PartialBijection::empty() const {
  return std::all_of(img.begin(), img.end(), [](Elem y) { return y < 0; });
}

ElemSet PartialBijection::domain() const {
  ElemSet out;
  for (Elem x = 0; x < static_cast<Elem>(img.size()); ++x)
    if (img[x] >= 0) out.push_back(x);
  return out;
}

ElemSet PartialBijection::range() const {
  ElemSet out;
  for (Elem y : img)
    if (y >= 0) out.push_back(y);
  return normalized(std::move(out));
}

bool PartialBijection::is_idempotent() const {
  for (Elem x = 0; x < static_cast<Elem>(img.size()); ++x)
    if (img[x] >= 0 && img[x] != x) return false;
  return true;
}

bool PartialBijection::has_fixed_point() const {
  for (Elem x = 0; x < static_cast<Elem>(img.size()); ++x)
    if (img[x] == x) return true;
  return false;
}

PartialBijection pb_empty(int n) { return {std::vector<Elem>(n, -1)}; }

PartialBijection pb_identity(int n, const ElemSet& on) {
  PartialBijection p = pb_empty(n);
  for (Elem x : on) p.img[x] = x;
  return p;
}

PartialBijection pb_compose(const PartialBijection& phi, const PartialBijection& psi) {
  PartialBijection out = pb_empty(static_cast<int>(psi.img.size()));
  for (std::size_t x = 0; x < psi.img.size(); ++x) {
    Elem y = psi.img[x];
    if (y >= 0) out.img[x] = phi.img[y];
  }
  return out;
}

PartialBijection pb_invert(const PartialBijection& phi) {
  PartialBijection out = pb_empty(static_cast<int>(phi.img.size()));
  for (std::size_t x = 0; x < phi.img.size(); ++x)
    if (phi.img[x] >= 0) out.img[phi.img[x]] = static_cast<Elem>(x);
  return out;
}

bool pb_leq(const PartialBijection& phi, const PartialBijection& psi) {
  for (std::size_t x = 0; x < phi.img.size(); ++x)
    if (phi.img[x] >= 0 && phi.img[x] != psi.img[x]) return false;
  return true;
}

std::string pb_render(const Semigroup& S, const PartialBijection& phi) {
  std::string out = "{";
  bool first = true;
  for (Elem x = 0; x < static_cast<Elem>(phi.img.size()); ++x) {
    if (phi.img[x] < 0) continue;
    if (!first) out += ", ";
    first = false;
    out += S.name(x) + "->" + S.name(phi.img[x]);
  }
  return out + "}";
}

PartialBijection regular_rep(const Semigroup& S, Elem s) {
  PartialBijection p = pb_empty(S.size());
  std::vector<bool> hit(S.size(), false);
  for (Elem x = 0; x < S.size(); ++x) {
    if (x == S.zero()) continue;
    Elem y = S.mul(s, x);
    if (y == S.zero()) continue;
    if (hit[y])
      throw Error(ErrorKind::Precondition,
                  "semigroup is not 0-left cancellative: theta_" + S.name(s) + " is not injective");
    hit[y] = true;
    p.img[x] = y;
  }
  return p;
}

PartialBijection regular_rep_tilde(const Semigroup& S, Elem u) {
  if (u == kOne) return pb_identity(S.size(), S.nonzero());
  return regular_rep(S, u);
}

ElemSet F_set(const Semigroup& S, Elem s) {
  if (s == kOne) return S.nonzero();
  ElemSet out;
  for (Elem x : S.nonzero())
    if (S.mul(s, x) != S.zero()) out.push_back(x);
  return out;
}

ElemSet E_set(const Semigroup& S, Elem s) {
  if (s == kOne) return S.nonzero();
  return set_difference(S.right_ideal(s), {S.zero()});
}

ElemSet F_lambda(const Semigroup& S, const ElemSet& lambda) {
  ElemSet out = S.nonzero();
  for (Elem l : lambda) out = set_intersection(out, F_set(S, l));
  return out;
}

ElemSet forward_image(const Semigroup& S, Elem s, const ElemSet& X) {
  ElemSet out;
  for (Elem x : X) {
    Elem y = S.mul(s, x);
    if (y != S.zero()) out.push_back(y);
  }
  return normalized(std::move(out));
}

ElemSet backward_image(const Semigroup& S, Elem s, const ElemSet& X) {
  ElemSet out;
  for (Elem y : S.nonzero())
    if (set_contains(X, S.mul(s, y))) out.push_back(y);
  return out;
}

PartialBijection evaluate_word(const Semigroup& S, const Word& w) {
  PartialBijection acc = pb_identity(S.size(), S.nonzero());
  for (const Generator& g : w) {
    PartialBijection theta = regular_rep(S, g.s);
    acc = pb_compose(acc, g.inverse ? pb_invert(theta) : theta);
  }
  return acc;
}

std::string word_render(const Semigroup& S, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += "t(" + S.name(w[i].s) + ")";
    if (w[i].inverse) out += "^-1";
  }
  return out;
}

std::optional<std::size_t> Hull::find(const PartialBijection& phi) const {
  auto it = index_.find(phi.img);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> Hull::idempotents() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].is_idempotent()) out.push_back(i);
  return out;
}

Hull generate_hull(const Semigroup& S, std::size_t cap) {
  std::vector<std::pair<Generator, PartialBijection>> gens;
  for (Elem s = 0; s < S.size(); ++s) {
    PartialBijection theta = regular_rep(S, s);
    gens.push_back({{s, false}, theta});
    gens.push_back({{s, true}, pb_invert(theta)});
  }
  Hull H;
  auto add = [&](PartialBijection p, Word w) {
    if (H.index_.count(p.img)) return;
    if (H.elements_.size() >= cap)
      throw Error(ErrorKind::Cap, "inverse hull exceeds cap of " + std::to_string(cap) + " elements");
    H.index_.emplace(p.img, H.elements_.size());
    H.elements_.push_back(std::move(p));
    H.witness_.push_back(std::move(w));
  };
  for (const auto& [g, p] : gens) add(p, Word{g});
  for (std::size_t i = 0; i < H.elements_.size(); ++i) {
    for (const auto& [g, p] : gens) {
      PartialBijection next = pb_compose(H.elements_[i], p);
      Word w = H.witness_[i];
      w.push_back(g);
      add(std::move(next), std::move(w));
    }
  }
  return H;
}

std::vector<ElemSet> sort_sets(std::vector<ElemSet> sets) {
  std::sort(sets.begin(), sets.end(), [](const ElemSet& a, const ElemSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

std::vector<ElemSet> constructible_sets(const Hull& H) {
  std::vector<ElemSet> out;
  for (std::size_t i : H.idempotents()) out.push_back(H[i].domain());
  return sort_sets(std::move(out));
}

std::vector<ElemSet> constructible_sets(const Semigroup& S, std::size_t cap) {
  return constructible_sets(generate_hull(S, cap));
}

std::vector<ElemSet> constructible_closure(const Semigroup& S) {
  std::set<ElemSet> seen;
  std::deque<ElemSet> work;
  auto push = [&](ElemSet X) {
    if (seen.insert(X).second) work.push_back(std::move(X));
  };
  for (Elem s = 0; s < S.size(); ++s) push(E_set(S, s));
  while (!work.empty()) {
    ElemSet X = work.front();
    work.pop_front();
    for (Elem s = 0; s < S.size(); ++s) {
      push(forward_image(S, s, X));
      push(backward_image(S, s, X));
    }
  }
  return sort_sets({seen.begin(), seen.end()});
}

bool nf_valid(const NormalForm& nf) {
  bool meets_s = std::any_of(nf.lambda.begin(), nf.lambda.end(), [](Elem l) { return l != kOne; });
  return meets_s && std::is_sorted(nf.lambda.begin(), nf.lambda.end()) &&
         set_contains(nf.lambda, nf.u) && set_contains(nf.lambda, nf.v);
}

std::string nf_render(const Semigroup& S, const NormalForm& nf) {
  return "(" + S.render(nf.u) + ", " + S.render(nf.lambda) + ", " + S.render(nf.v) + ")";
}

PartialBijection nf_evaluate(const Semigroup& S, const NormalForm& nf) {
  if (!nf_valid(nf)) throw Error(ErrorKind::Precondition, "malformed normal form");
  PartialBijection f = pb_identity(S.size(), F_lambda(S, nf.lambda));
  return pb_compose(regular_rep_tilde(S, nf.u),
                    pb_compose(f, pb_invert(regular_rep_tilde(S, nf.v))));
}

std::optional<TildeLcm> lcm_tilde(const Semigroup& S, Elem u, Elem v) {
  if (u == kOne && v == kOne) return TildeLcm{kOne, kOne, kOne};
  if (u == kOne) return TildeLcm{v, v, kOne};
  if (v == kOne) return TildeLcm{u, kOne, u};
  auto r = lcm(S, u, v);
  if (!r) return std::nullopt;
  if (*r == S.zero()) return TildeLcm{S.zero(), S.zero(), S.zero()};
  auto cofactor = [&](Elem a) -> Elem {
    if (a == *r) return kOne;
    for (Elem x = 0; x < S.size(); ++x)
      if (S.mul(a, x) == *r) return x;
    throw Error(ErrorKind::Internal, "lcm is not a multiple");
  };
  return TildeLcm{*r, cofactor(u), cofactor(v)};
}

NormalForm nf_generator(const Semigroup& S, Generator g) {
  (void)S;
  NormalForm nf;
  nf.lambda = normalized({kOne, g.s});
  if (g.inverse) nf.v = g.s;
  else nf.u = g.s;
  return nf;
}

NormalForm nf_product(const Semigroup& S, const NormalForm& a, const NormalForm& b) {
  auto l = lcm_tilde(S, a.v, b.u);
  if (!l)
    throw Error(ErrorKind::Precondition, "no least common multiple for " + S.render(a.v) +
                                             " and " + S.render(b.u));
  NormalForm out;
  out.u = S.mul_tilde(a.u, l->x);
  out.v = S.mul_tilde(b.v, l->y);
  ElemSet lambda{l->w};
  for (Elem p : a.lambda) lambda.push_back(S.mul_tilde(p, l->x));
  for (Elem p : b.lambda) lambda.push_back(S.mul_tilde(p, l->y));
  out.lambda = normalized(std::move(lambda));
  return out;
}

NormalForm hull_normal_form(const Semigroup& S, const Word& witness) {
  if (witness.empty()) throw Error(ErrorKind::Precondition, "empty witness word");
  NormalForm acc = nf_generator(S, witness.front());
  for (std::size_t i = 1; i < witness.size(); ++i)
    acc = nf_product(S, acc, nf_generator(S, witness[i]));
  return acc;
}

NormalForm hull_normal_form(const Semigroup& S, const Hull& H, std::size_t index) {
  return hull_normal_form(S, H.witness(index));
}

NormalForm local_units_form(const Semigroup& S, const NormalForm& nf) {
  Elem anchor = kOne;
  for (Elem l : nf.lambda)
    if (l != kOne && l != S.zero()) {
      anchor = l;
      break;
    }
  if (anchor == kOne) return nf;  // the empty map
  auto plus = classify_element(S, anchor).right_unit;
  if (!plus) throw Error(ErrorKind::Precondition, S.name(anchor) + " has no right local unit");
  NormalForm out = nf;
  if (out.u == kOne) out.u = *plus;
  if (out.v == kOne) out.v = *plus;
  ElemSet lambda{out.u, out.v};
  for (Elem l : nf.lambda)
    if (l != kOne) lambda.push_back(l);
  out.lambda = normalized(std::move(lambda));
  return out;
}

bool is_zero_e_unitary(const Hull& H) {
  for (const auto& p : H.elements())
    if (p.has_fixed_point() && !p.is_idempotent()) return false;
  return true;
}

bool is_cover(const std::vector<ElemSet>& members, const std::vector<ElemSet>& Z,
              const ElemSet& e) {
  for (const ElemSet& x : members) {
    if (x.empty() || !set_subset(x, e)) continue;
    bool meets = std::any_of(Z.begin(), Z.end(), [&](const ElemSet& z) {
      return !set_intersection(x, z).empty();
    });
    if (!meets) return false;
  }
  return true;
}

AlignedCover aligned_cover(const Semigroup& S, Elem s, Elem t) {
  Alignment a = alignment(S, s, t);
  AlignedCover out;
  if (a.kind == Alignment::Kind::Principal) {
    if (a.witnesses.front() != S.zero()) out.basis = a.witnesses;
  } else if (a.kind == Alignment::Kind::Basis) {
    out.basis = a.witnesses;
  } else {
    throw Error(ErrorKind::Precondition, "no basis for " + S.name(s) + "S n " + S.name(t) + "S");
  }
  auto cofactor = [&](Elem a0, Elem w) -> Elem {
    for (Elem x = 0; x < S.size(); ++x)
      if (S.mul(a0, x) == w) return x;
    throw Error(ErrorKind::Precondition, "basis element " + S.name(w) + " is not in " + S.name(a0) + "S");
  };
  const PartialBijection ts = regular_rep(S, t);
  const PartialBijection ss = regular_rep(S, s);
  const PartialBijection ft = pb_compose(pb_invert(ts), ts);
  for (Elem w : out.basis) {
    Elem x = cofactor(s, w), y = cofactor(t, w);
    out.x.push_back(x);
    out.y.push_back(y);
    PartialBijection ty = regular_rep(S, y);
    out.idempotents.push_back(pb_compose(pb_compose(ty, pb_invert(ty)), ft));
  }
  out.target = pb_compose(pb_invert(ts), pb_compose(ss, pb_compose(pb_invert(ss), ts)));
  return out;
}

}  // namespace ihull
