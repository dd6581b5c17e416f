#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ihull/semigroup.hpp"

namespace ihull {

// Injective partial map on S' stored as an image table over all of S;
// -1 marks "undefined" and the zero never carries a value.
struct PartialBijection {
  std::vector<Elem> img;

  Elem operator()(Elem x) const { return img[x]; }
  bool defined(Elem x) const { return img[x] >= 0; }
  bool empty() const;
  ElemSet domain() const;
  ElemSet range() const;
  // Structural test: domain equals range and every point is fixed.
  bool is_idempotent() const;
  bool has_fixed_point() const;

  bool operator==(const PartialBijection& o) const { return img == o.img; }
  bool operator<(const PartialBijection& o) const { return img < o.img; }
};

PartialBijection pb_empty(int n);
PartialBijection pb_identity(int n, const ElemSet& on);
// (phi o psi)(x) = phi(psi(x)).
PartialBijection pb_compose(const PartialBijection& phi, const PartialBijection& psi);
PartialBijection pb_invert(const PartialBijection& phi);
// phi <= psi in the natural order: phi is a restriction of psi.
bool pb_leq(const PartialBijection& phi, const PartialBijection& psi);
std::string pb_render(const Semigroup& S, const PartialBijection& phi);

// theta_s : F_s -> E_s, x -> sx. Throws when s does not act injectively.
PartialBijection regular_rep(const Semigroup& S, Elem s);
// theta for s in S~ (kOne gives the identity on S').
PartialBijection regular_rep_tilde(const Semigroup& S, Elem u);
ElemSet F_set(const Semigroup& S, Elem s);  // {x != 0 : sx != 0}
ElemSet E_set(const Semigroup& S, Elem s);  // sS \ {0}
ElemSet F_lambda(const Semigroup& S, const ElemSet& lambda);

// s[X] = sX \ {0} and s^-1[X] = {y : sy in X}.
ElemSet forward_image(const Semigroup& S, Elem s, const ElemSet& X);
ElemSet backward_image(const Semigroup& S, Elem s, const ElemSet& X);

struct Generator {
  Elem s;
  bool inverse;
};
using Word = std::vector<Generator>;

PartialBijection evaluate_word(const Semigroup& S, const Word& w);
std::string word_render(const Semigroup& S, const Word& w);

class Hull {
public:
  std::size_t size() const { return elements_.size(); }
  const PartialBijection& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<PartialBijection>& elements() const { return elements_; }
  const Word& witness(std::size_t i) const { return witness_[i]; }
  std::optional<std::size_t> find(const PartialBijection& phi) const;
  std::vector<std::size_t> idempotents() const;

private:
  friend Hull generate_hull(const Semigroup& S, std::size_t cap);
  std::vector<PartialBijection> elements_;
  std::vector<Word> witness_;
  std::map<std::vector<Elem>, std::size_t> index_;
};

inline constexpr std::size_t kDefaultHullCap = 100000;

Hull generate_hull(const Semigroup& S, std::size_t cap = kDefaultHullCap);

// Sorted by size, then lexicographically.
std::vector<ElemSet> sort_sets(std::vector<ElemSet> sets);
std::vector<ElemSet> constructible_sets(const Hull& H);
std::vector<ElemSet> constructible_sets(const Semigroup& S, std::size_t cap = kDefaultHullCap);
// Least family containing every E_s and closed under s[.] and s^-1[.].
std::vector<ElemSet> constructible_closure(const Semigroup& S);

// theta_u f_Lambda theta_v^-1 over S~.
struct NormalForm {
  Elem u = kOne;
  ElemSet lambda{kOne};  // sorted; kOne sorts first
  Elem v = kOne;

  bool operator==(const NormalForm& o) const {
    return u == o.u && lambda == o.lambda && v == o.v;
  }
};

bool nf_valid(const NormalForm& nf);
std::string nf_render(const Semigroup& S, const NormalForm& nf);
PartialBijection nf_evaluate(const Semigroup& S, const NormalForm& nf);

// w = lcm(u, v) in S~ with w = u x = v y.
struct TildeLcm {
  Elem w, x, y;
};
std::optional<TildeLcm> lcm_tilde(const Semigroup& S, Elem u, Elem v);

NormalForm nf_generator(const Semigroup& S, Generator g);
NormalForm nf_product(const Semigroup& S, const NormalForm& a, const NormalForm& b);
NormalForm hull_normal_form(const Semigroup& S, const Hull& H, std::size_t index);
NormalForm hull_normal_form(const Semigroup& S, const Word& witness);
// Removes the unit marker from u, v and Lambda (needs right local units).
NormalForm local_units_form(const Semigroup& S, const NormalForm& nf);

bool is_zero_e_unitary(const Hull& H);

// Every nonzero x <= e meets some z in Z.
bool is_cover(const std::vector<ElemSet>& members, const std::vector<ElemSet>& Z,
              const ElemSet& e);

struct AlignedCover {
  ElemSet basis;
  std::vector<Elem> x, y;                  // w_i = s x_i = t y_i
  std::vector<PartialBijection> idempotents;
  PartialBijection target;                 // theta_t^-1 theta_s theta_s^-1 theta_t
};
AlignedCover aligned_cover(const Semigroup& S, Elem s, Elem t);

}  // namespace ihull
