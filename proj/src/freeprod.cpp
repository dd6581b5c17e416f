#include "ihull/freeprod.hpp"

#include <algorithm>
#include <sstream>

namespace ihull {

namespace {

void require_monoid_with_zero(const Semigroup& S, const char* which) {
  if (!S.unit())
    throw Error(ErrorKind::Precondition, std::string("factor ") + which + " has no identity");
  if (S.size() < 2)
    throw Error(ErrorKind::Precondition, std::string("factor ") + which + " has identity equal to zero");
}

const char* tag_name(Factor f) { return f == Factor::M ? "M" : "N"; }

}  // namespace

FreeProduct::FreeProduct(Semigroup M, Semigroup N) : M_(std::move(M)), N_(std::move(N)) {
  require_monoid_with_zero(M_, "M");
  require_monoid_with_zero(N_, "N");
}

FpElement FreeProduct::syllable(Factor f, Elem e) const {
  const Semigroup& F = factor(f);
  if (e < 0 || e >= F.size())
    throw Error(ErrorKind::Input, "syllable id out of range");
  if (e == F.zero()) return zero();
  if (e == factor_one(f)) return one();
  return {FpElement::Tag::Word, {{f, e}}};
}

bool FreeProduct::valid(const FpElement& x) const {
  if (x.tag != FpElement::Tag::Word) return x.syllables.empty();
  if (x.syllables.empty()) return false;
  for (std::size_t i = 0; i < x.syllables.size(); ++i) {
    const Syllable& s = x.syllables[i];
    const Semigroup& F = factor(s.factor);
    if (s.e < 0 || s.e >= F.size() || s.e == F.zero() || s.e == factor_one(s.factor)) return false;
    if (i > 0 && x.syllables[i - 1].factor == s.factor) return false;
  }
  return true;
}

FpElement FreeProduct::normalize(const std::vector<Syllable>& raw) const {
  std::vector<Syllable> out;
  for (const Syllable& s : raw) {
    const Semigroup& F = factor(s.factor);
    if (s.e < 0 || s.e >= F.size()) throw Error(ErrorKind::Input, "syllable id out of range");
    Syllable cur = s;
    for (;;) {
      if (cur.e == F.zero()) return zero();
      if (cur.e == factor_one(cur.factor)) break;
      if (!out.empty() && out.back().factor == cur.factor) {
        cur.e = factor_mul(cur.factor, out.back().e, cur.e);
        out.pop_back();
        continue;
      }
      out.push_back(cur);
      break;
    }
  }
  if (out.empty()) return one();
  return {FpElement::Tag::Word, std::move(out)};
}

FpElement FreeProduct::multiply(const FpElement& x, const FpElement& y) const {
  if (!valid(x) || !valid(y)) throw Error(ErrorKind::Input, "operand is not in normal form");
  if (x.tag == FpElement::Tag::Zero || y.tag == FpElement::Tag::Zero) return zero();
  std::vector<Syllable> raw = x.syllables;
  raw.insert(raw.end(), y.syllables.begin(), y.syllables.end());
  return normalize(raw);
}

bool FreeProduct::right_invertible(const Syllable& s) const {
  const Semigroup& F = factor(s.factor);
  for (Elem m = 0; m < F.size(); ++m)
    if (F.mul(s.e, m) == factor_one(s.factor)) return true;
  return false;
}

bool FreeProduct::divides(const FpElement& x, const FpElement& y) const {
  if (y.tag == FpElement::Tag::Zero) return true;
  if (x.tag == FpElement::Tag::Zero) return false;
  // xS = x'S where x' drops trailing right-invertible syllables.
  std::vector<Syllable> u = x.syllables;
  while (!u.empty() && right_invertible(u.back())) u.pop_back();
  if (u.empty()) return true;
  const Syllable m = u.back();
  u.pop_back();
  if (y.tag != FpElement::Tag::Word || y.syllables.size() <= u.size()) return false;
  if (!std::equal(u.begin(), u.end(), y.syllables.begin())) return false;
  const Syllable& n = y.syllables[u.size()];
  if (n.factor != m.factor) return false;
  return factor(m.factor).divides(m.e, n.e);
}

std::vector<FpElement> FreeProduct::enumerate(int max_syllables) const {
  std::vector<FpElement> out{zero(), one()};
  std::vector<std::vector<Syllable>> layer{{}};
  for (int len = 1; len <= max_syllables; ++len) {
    std::vector<std::vector<Syllable>> next;
    for (const auto& w : layer)
      for (Factor f : {Factor::M, Factor::N}) {
        if (!w.empty() && w.back().factor == f) continue;
        const Semigroup& F = factor(f);
        for (Elem e = 0; e < F.size(); ++e) {
          if (e == F.zero() || e == factor_one(f)) continue;
          auto v = w;
          v.push_back({f, e});
          out.push_back({FpElement::Tag::Word, v});
          next.push_back(std::move(v));
        }
      }
    layer = std::move(next);
  }
  return out;
}

FpLcm FreeProduct::lcm(const FpElement& x, const FpElement& y, int syllable_bound,
                       std::size_t budget) const {
  for (Factor f : {Factor::M, Factor::N}) {
    PropertyFlags flags = property_flags(factor(f));
    if (!flags.zero_left_cancellative || !flags.admits_lcms)
      throw Error(ErrorKind::Precondition, std::string("factor ") + tag_name(f) +
                                               " is not 0-left cancellative with lcms");
  }
  if (!valid(x) || !valid(y)) throw Error(ErrorKind::Input, "operand is not in normal form");

  auto trimmed = [&](const FpElement& z) {
    std::vector<Syllable> u = z.syllables;
    while (!u.empty() && right_invertible(u.back())) u.pop_back();
    return u;
  };

  FpElement r;
  if (x.tag == FpElement::Tag::Zero || y.tag == FpElement::Tag::Zero) {
    r = zero();
  } else if (divides(x, y)) {
    r = y;
  } else if (divides(y, x)) {
    r = x;
  } else {
    auto ux = trimmed(x), uy = trimmed(y);
    const Syllable m = ux.back(), n = uy.back();
    ux.pop_back();
    uy.pop_back();
    r = zero();
    if (ux == uy && m.factor == n.factor) {
      if (auto w = ihull::lcm(factor(m.factor), m.e, n.e)) {
        ux.push_back({m.factor, *w});
        r = normalize(ux);
      }
    }
  }

  FpLcm out;
  out.syllable_bound = syllable_bound;
  out.value = r;
  std::size_t estimate = 2;
  {
    std::size_t layer = 1;
    const std::size_t a = static_cast<std::size_t>(M_.size() - 2), b = static_cast<std::size_t>(N_.size() - 2);
    for (int len = 1; len <= syllable_bound && estimate <= budget; ++len) {
      layer = len == 1 ? a + b : layer * std::max(a, b);
      estimate += layer;
    }
  }
  if (estimate > budget) {
    out.kind = FpLcm::Kind::Unresolved;
    return out;
  }
  if (!divides(x, r) || !divides(y, r))
    throw Error(ErrorKind::Internal, "computed lcm is not a common multiple");
  const auto universe = enumerate(syllable_bound);
  out.checked = universe.size();
  for (const auto& c : universe) {
    bool common = divides(x, c) && divides(y, c);
    if (common != divides(r, c))
      throw Error(ErrorKind::Internal, "lcm check failed at " + render(c));
  }
  out.kind = r.tag == FpElement::Tag::Zero ? FpLcm::Kind::Zero : FpLcm::Kind::Element;
  return out;
}

std::string FreeProduct::render(const FpElement& x) const {
  if (x.tag == FpElement::Tag::Zero) return "0";
  if (x.tag == FpElement::Tag::One) return "1";
  std::string out;
  for (const Syllable& s : x.syllables) {
    if (!out.empty()) out += ' ';
    out += factor(s.factor).name(s.e) + "." + tag_name(s.factor);
  }
  return out;
}

FpElement FreeProduct::parse(const std::string& expr) const {
  std::istringstream in(expr);
  std::string tok;
  std::vector<Syllable> raw;
  bool any = false, is_zero = false;
  while (in >> tok) {
    if (tok == "*") continue;
    any = true;
    if (tok == "1") continue;
    if (tok == "0") {
      is_zero = true;
      continue;
    }
    auto dot = tok.rfind('.');
    if (dot == std::string::npos || dot == 0 || dot + 2 != tok.size())
      throw Error(ErrorKind::Input, "malformed syllable \"" + tok + "\"");
    const char tag = tok.back();
    if (tag != 'M' && tag != 'N') throw Error(ErrorKind::Input, "unknown factor in \"" + tok + "\"");
    const Factor f = tag == 'M' ? Factor::M : Factor::N;
    auto e = factor(f).find(tok.substr(0, dot));
    if (!e) throw Error(ErrorKind::Input, "unknown element in \"" + tok + "\"");
    raw.push_back({f, *e});
  }
  if (!any) throw Error(ErrorKind::Input, "empty expression");
  if (is_zero) return zero();
  return normalize(raw);
}

ElemSet fp_rclass_reps(const Semigroup& M) {
  if (!M.unit()) throw Error(ErrorKind::Precondition, "monoid has no identity");
  const Elem one = *M.unit();
  ElemSet reps{one};
  std::vector<ElemSet> seen{M.right_ideal(one)};
  for (Elem x : M.nonzero()) {
    const ElemSet& I = M.right_ideal(x);
    if (std::find(seen.begin(), seen.end(), I) != seen.end()) continue;
    seen.push_back(I);
    reps.push_back(x);
  }
  return normalized(reps);
}

}  // namespace ihull
