#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ihull/semigroup.hpp"

namespace ihull {

enum class Factor { M, N };

struct Syllable {
  Factor factor;
  Elem e;
  bool operator==(const Syllable& o) const { return factor == o.factor && e == o.e; }
  bool operator<(const Syllable& o) const {
    return factor != o.factor ? factor < o.factor : e < o.e;
  }
};

struct FpElement {
  enum class Tag { Zero, One, Word };
  Tag tag = Tag::One;
  std::vector<Syllable> syllables;

  bool operator==(const FpElement& o) const { return tag == o.tag && syllables == o.syllables; }
  bool operator<(const FpElement& o) const {
    return tag != o.tag ? tag < o.tag : syllables < o.syllables;
  }
};

struct FpLcm {
  enum class Kind { Element, Zero, Unresolved };
  Kind kind = Kind::Unresolved;
  FpElement value;
  int syllable_bound = 0;
  std::size_t checked = 0;  // elements enumerated during verification
};

// M *_0 N for two finite monoids with zero. Elements are symbolic.
class FreeProduct {
public:
  FreeProduct(Semigroup M, Semigroup N);

  const Semigroup& factor(Factor f) const { return f == Factor::M ? M_ : N_; }

  static FpElement zero() { return {FpElement::Tag::Zero, {}}; }
  static FpElement one() { return {FpElement::Tag::One, {}}; }
  FpElement syllable(Factor f, Elem e) const;

  bool valid(const FpElement& x) const;
  // Reduces any syllable sequence to normal form.
  FpElement normalize(const std::vector<Syllable>& raw) const;
  FpElement multiply(const FpElement& x, const FpElement& y) const;

  // x | y, i.e. y lies in x(M *_0 N).
  bool divides(const FpElement& x, const FpElement& y) const;
  // Needs both factors 0-left cancellative with lcms. The answer is
  // checked against every element of at most syllable_bound syllables.
  FpLcm lcm(const FpElement& x, const FpElement& y, int syllable_bound = 4,
            std::size_t budget = 200000) const;

  // Zero, One and every word of at most max_syllables syllables.
  std::vector<FpElement> enumerate(int max_syllables) const;

  std::string render(const FpElement& x) const;
  // Tokens "name.M" / "name.N", "1", "0", optionally joined by "*".
  FpElement parse(const std::string& expr) const;

private:
  bool right_invertible(const Syllable& s) const;
  Elem factor_mul(Factor f, Elem a, Elem b) const { return factor(f).mul(a, b); }
  Elem factor_one(Factor f) const { return *factor(f).unit(); }

  Semigroup M_, N_;
};

// One representative per nonzero R-class of a finite monoid with zero:
// the identity for its own class, the smallest index elsewhere.
ElemSet fp_rclass_reps(const Semigroup& M);

}  // namespace ihull
