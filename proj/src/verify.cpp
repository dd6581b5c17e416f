#include "ihull/verify.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>

#include "ihull/strings.hpp"

namespace ihull {

namespace {

struct Failure {
  std::string what;
};

struct Checker {
  std::size_t n = 0;
  void operator()(bool ok, const std::function<std::string()>& msg) {
    ++n;
    if (!ok) throw Failure{msg()};
  }
};

class Ctx {
public:
  Ctx(const Semigroup& S, const VerifyOptions& o) : S(S), opts(o), f(property_flags(S)) {}

  const Semigroup& S;
  VerifyOptions opts;
  PropertyFlags f;

  const Hull& hull() {
    if (!hull_) hull_ = generate_hull(S, opts.max_hull);
    return *hull_;
  }
  const std::vector<StringSet>& strings() {
    if (!strings_) strings_ = all_strings(S);
    return *strings_;
  }
  const Spectrum& spectrum() {
    if (!sp_) sp_ = spectrum_of(S, opts.max_hull);
    return *sp_;
  }
  const std::vector<Character>& characters() {
    if (!chars_) {
      chars_.emplace();
      for (const auto& xi : filters(spectrum().E)) chars_->push_back(char_of(spectrum().E, xi));
    }
    return *chars_;
  }

  std::string el(Elem x) const { return x == kOne ? "1*" : S.name(x); }
  std::string set(const ElemSet& X) const {
    std::string out = "{";
    for (std::size_t i = 0; i < X.size(); ++i) out += (i ? ", " : "") + el(X[i]);
    return out + "}";
  }
  std::string pb(const PartialBijection& p) const { return pb_render(S, p); }
  std::string chr(const Character& phi) {
    std::vector<std::string> parts;
    const auto& E = spectrum().E;
    for (int x = 0; x < E.size(); ++x)
      if (phi[x]) parts.push_back(set(E.members[x]));
    std::string out = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " " : "") + parts[i];
    return out + "]";
  }

private:
  std::optional<Hull> hull_;
  std::optional<std::vector<StringSet>> strings_;
  std::optional<Spectrum> sp_;
  std::optional<std::vector<Character>> chars_;
};

using Hypothesis = std::pair<std::string, std::function<bool(Ctx&)>>;

struct Suite {
  std::string name;
  std::vector<Hypothesis> needs;
  std::function<void(Ctx&, Checker&)> body;
};

const Hypothesis kLeftCancel{"0-left cancellative", [](Ctx& c) { return c.f.zero_left_cancellative; }};
const Hypothesis kRightCancel{"0-right cancellative", [](Ctx& c) { return c.f.zero_right_cancellative; }};
const Hypothesis kLcms{"admits lcms", [](Ctx& c) { return c.f.admits_lcms; }};
const Hypothesis kCategorical{"categorical at zero", [](Ctx& c) { return c.f.categorical_at_zero; }};
const Hypothesis kReductive{"right reductive", [](Ctx& c) { return c.f.right_reductive; }};
const Hypothesis kLocalUnits{"right local units", [](Ctx& c) { return c.f.right_local_units; }};
const Hypothesis kSmallE{"semilattice of at most 8 members", [](Ctx& c) { return c.spectrum().E.size() <= 8; }};

bool in_right_ideal(const Semigroup& S, const ElemSet& R) {
  for (Elem x : R)
    for (Elem y = 0; y < S.size(); ++y)
      if (!set_contains(R, S.mul(x, y))) return false;
  return true;
}

void associativity(Ctx& c, Checker& check) {
  const Semigroup& S = c.S;
  for (Elem x = 0; x < S.size(); ++x)
    for (Elem y = 0; y < S.size(); ++y)
      for (Elem z = 0; z < S.size(); ++z)
        check(S.mul(S.mul(x, y), z) == S.mul(x, S.mul(y, z)),
              [&] { return "(xy)z != x(yz) at x=" + c.el(x) + " y=" + c.el(y) + " z=" + c.el(z); });
}

void orthogonal_idempotents(Ctx& c, Checker& check) {
  const Semigroup& S = c.S;
  for (Elem e : S.nonzero())
    for (Elem g : S.nonzero())
      if (e != g && is_idempotent(S, e) && is_idempotent(S, g))
        check(S.mul(e, g) == S.zero(), [&] { return "ef != 0 at e=" + c.el(e) + " f=" + c.el(g); });
}

void idempotent_absorption(Ctx& c, Checker& check) {
  const Semigroup& S = c.S;
  for (Elem e : S.nonzero()) {
    if (!is_idempotent(S, e)) continue;
    for (Elem s : S.nonzero()) {
      const Elem es = S.mul(e, s);
      check((es != S.zero()) == (es == s), [&] { return "es = " + c.el(es) + " at e=" + c.el(e) + " s=" + c.el(s); });
    }
  }
}

void lcm_ideals(Ctx& c, Checker& check) {
  const Semigroup& S = c.S;
  for (Elem s = 0; s < S.size(); ++s)
    for (Elem t = 0; t < S.size(); ++t) {
      auto r = lcm(S, s, t);
      if (!r) continue;
      auto where = [&] { return "s=" + c.el(s) + " t=" + c.el(t) + " r=" + c.el(*r); };
      check(set_intersection(S.right_ideal(s), S.right_ideal(t)) == S.right_ideal(*r),
            [&] { return "sS n tS != rS at " + where(); });
      check(divides(S, s, *r) && divides(S, t, *r), [&] { return "r is not a common multiple at " + where(); });
      for (Elem r2 : all_lcms(S, s, t))
        check(S.right_ideal(r2) == S.right_ideal(*r), [&] { return "lcm candidates differ at " + where(); });
    }
}

void local_units(Ctx& c, Checker& check) {
  const Semigroup& S = c.S;
  bool all_in = true;
  for (Elem s : S.nonzero()) all_in = all_in && set_contains(S.right_ideal(s), s);
  check(c.f.right_local_units == all_in, [&] { return std::string("right local units flag disagrees with s in sS"); });
}

void degenerate_elements(Ctx& c, Checker& check) {
  const Semigroup& S = c.S;
  ElemSet degenerate;
  for (Elem s : S.nonzero()) {
    bool in_square = false, kills = true;
    for (Elem x = 0; x < S.size(); ++x) {
      kills = kills && S.mul(x, s) == S.zero();
      for (Elem y = 0; y < S.size(); ++y) in_square = in_square || S.mul(x, y) == s;
    }
    const bool flag = classify_element(S, s).degenerate;
    check(flag == (!in_square && kills), [&] { return "degenerate flag wrong at " + c.el(s); });
    if (flag) degenerate.push_back(s);
  }
  check(degenerate == set_difference(S.nonzero(), essential_subset(S)),
        [&] { return "degenerate elements " + c.set(degenerate) + " != S' minus essential part"; });
}

void representation_law(Ctx& c, Checker& check) {
  const Semigroup& S = c.S;
  for (Elem s = 0; s < S.size(); ++s)
    for (Elem t = 0; t < S.size(); ++t)
      check(pb_compose(regular_rep(S, s), regular_rep(S, t)) == regular_rep(S, S.mul(s, t)),
            [&] { return "theta_s theta_t != theta_st at s=" + c.el(s) + " t=" + c.el(t); });
}

void covariance(Ctx& c, Checker& check) {
  const Semigroup& S = c.S;
  const int n = S.size();
  for (Elem s = 0; s < n; ++s) {
    const auto ts = regular_rep(S, s);
    for (Elem t = 0; t < n; ++t) {
      auto where = [&] { return " at s=" + c.el(s) + " t=" + c.el(t); };
      check(pb_compose(ts, pb_identity(n, E_set(S, t))) == pb_compose(pb_identity(n, E_set(S, S.mul(s, t))), ts),
            [&] { return "theta_s 1_E_t != 1_E_st theta_s" + where(); });
      check(pb_compose(pb_identity(n, F_set(S, t)), ts) == pb_compose(ts, pb_identity(n, F_set(S, S.mul(t, s)))),
            [&] { return "1_F_t theta_s != theta_s 1_F_ts" + where(); });
    }
  }
}

void hull_closure(Ctx& c, Checker& check) {
  const Semigroup& S = c.S;
  const Hull& H = c.hull();
  for (Elem s = 0; s < S.size(); ++s) {
    check(H.find(regular_rep(S, s)).has_value(), [&] { return "theta_" + c.el(s) + " missing"; });
    check(H.find(pb_invert(regular_rep(S, s))).has_value(), [&] { return "theta_" + c.el(s) + "^-1 missing"; });
  }
  for (std::size_t i = 0; i < H.size(); ++i) {
    check(H.find(pb_invert(H[i])).has_value(), [&] { return "inverse of " + c.pb(H[i]) + " missing"; });
    check(evaluate_word(S, H.witness(i)) == H[i], [&] { return "witness of " + c.pb(H[i]) + " evaluates elsewhere"; });
    for (std::size_t j = 0; j < H.size(); ++j)
      check(H.find(pb_compose(H[i], H[j])).has_value(),
            [&] { return "product " + c.pb(H[i]) + " . " + c.pb(H[j]) + " missing"; });
  }
}

void constructible_fixed_point(Ctx& c, Checker& check) {
  const Hull& H = c.hull();
  auto mine = constructible_sets(H);
  auto closure = constructible_closure(c.S);
  check(mine == closure, [&] {
    return "idempotent domains (" + std::to_string(mine.size()) + ") != closure (" +
           std::to_string(closure.size()) + ")";
  });
  for (std::size_t i : H.idempotents()) {
    check(H[i].is_idempotent(), [&] { return c.pb(H[i]) + " is not an identity map"; });
    check(std::binary_search(mine.begin(), mine.end(), H[i].domain(), [](const ElemSet& a, const ElemSet& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
          }), [&] { return "domain " + c.set(H[i].domain()) + " not listed"; });
  }
}

void constructible_ideals(Ctx& c, Checker& check) {
  for (const auto& X : constructible_sets(c.hull()))
    check(in_right_ideal(c.S, set_union(X, {c.S.zero()})),
          [&] { return c.set(X) + " u {0} is not a right ideal"; });
}

void normal_form_product(Ctx& c, Checker& check) {
  const Semigroup& S = c.S;
  const Hull& H = c.hull();
  std::vector<NormalForm> nfs;
  for (std::size_t i = 0; i < H.size(); ++i) {
    nfs.push_back(hull_normal_form(S, H, i));
    check(nf_valid(nfs.back()) && nf_evaluate(S, nfs.back()) == H[i],
          [&] { return "normal form " + nf_render(S, nfs.back()) + " does not evaluate to " + c.pb(H[i]); });
  }
  for (std::size_t i = 0; i < H.size(); ++i)
    for (std::size_t j = 0; j < H.size(); ++j) {
      NormalForm p = nf_product(S, nfs[i], nfs[j]);
      check(nf_evaluate(S, p) == pb_compose(H[i], H[j]), [&] {
        return nf_render(S, nfs[i]) + " * " + nf_render(S, nfs[j]) + " = " + nf_render(S, p) + " but the composite is " +
               c.pb(pb_compose(H[i], H[j]));
      });
    }
}

void zero_e_unitary(Ctx& c, Checker& check) {
  check(is_zero_e_unitary(c.hull()), [&] { return std::string("hull is not 0-E-unitary"); });
}

void categorical_hull_shape(Ctx& c, Checker& check) {
  const Semigroup& S = c.S;
  for (const auto& p : c.hull().elements()) {
    if (p.empty()) continue;
    bool found = false;
    for (Elem s : S.nonzero())
      for (Elem t : S.nonzero()) {
        if (found) break;
        auto sp = classify_element(S, s).right_unit, tp = classify_element(S, t).right_unit;
        if (sp && sp == tp && pb_compose(regular_rep(S, s), pb_invert(regular_rep(S, t))) == p) found = true;
      }
    check(found, [&] { return c.pb(p) + " is not theta_s theta_t^-1 with s+ = t+"; });
  }
}

void star_action(Ctx& c, Checker& check) {
  const Semigroup& S = c.S;
  for (Elem r = 0; r < S.size(); ++r) {
    StarDomains d = star_domains(S, r);
    std::set<StringSet> images;
    for (const auto& sigma : d.F) {
      StringSet img = star_forward(S, r, sigma);
      auto where = [&] { return " at r=" + c.el(r) + " sigma=" + c.set(sigma); };
      check(is_string(S, img) && in_E_star(S, r, img), [&] { return "r*sigma leaves E*_r" + where(); });
      check(star_backward(S, r, img) == sigma, [&] { return "backward(forward(sigma)) != sigma" + where(); });
      if (is_open(S, sigma)) check(is_open(S, img), [&] { return "openness lost" + where(); });
      if (is_maximal_string(S, sigma)) check(is_maximal_string(S, img), [&] { return "maximality lost" + where(); });
      for (Elem r2 = 0; r2 < S.size(); ++r2)
        if (in_F_star(S, r2, img))
          check(star_forward(S, r2, img) == star_forward(S, S.mul(r2, r), sigma),
                [&] { return "r2*(r*sigma) != (r2 r)*sigma with r2=" + c.el(r2) + where(); });
      images.insert(img);
    }
    check(images == std::set<StringSet>(d.E.begin(), d.E.end()), [&] { return "theta*_" + c.el(r) + " not onto E*"; });
    for (const auto& sigma : d.E) {
      StringSet pre = star_backward(S, r, sigma);
      auto where = [&] { return " at r=" + c.el(r) + " sigma=" + c.set(sigma); };
      check(star_forward(S, r, pre) == sigma, [&] { return "forward(backward(sigma)) != sigma" + where(); });
      if (c.f.categorical_at_zero && is_maximal_string(S, sigma))
        check(is_maximal_string(S, pre), [&] { return "backward image not maximal" + where(); });
    }
  }
}

void epsilon_homomorphism(Ctx& c, Checker& check) {
  const Semigroup& S = c.S;
  auto as_set = [](const std::vector<StringSet>& v) { return std::set<StringSet>(v.begin(), v.end()); };
  const auto cons = constructible_sets(c.hull());
  for (const auto& X : cons)
    for (const auto& Y : cons) {
      auto ex = as_set(epsilon(S, X)), ey = as_set(epsilon(S, Y));
      std::set<StringSet> both;
      std::set_intersection(ex.begin(), ex.end(), ey.begin(), ey.end(), std::inserter(both, both.end()));
      check(as_set(epsilon(S, set_intersection(X, Y))) == both,
            [&] { return "eps(X n Y) != eps(X) n eps(Y) at X=" + c.set(X) + " Y=" + c.set(Y); });
    }
  for (Elem r = 0; r < S.size(); ++r) {
    StarDomains d = star_domains(S, r);
    check(as_set(epsilon(S, E_set(S, r))) == as_set(d.E), [&] { return "eps(E_r) != E*_r at r=" + c.el(r); });
    check(as_set(epsilon(S, F_set(S, r))) == as_set(d.F), [&] { return "eps(F_r) != F*_r at r=" + c.el(r); });
  }
}

void sigma_action_laws(Ctx& c, Checker& check) {
  const Semigroup& S = c.S;
  const Hull& H = c.hull();
  const auto& strings = c.strings();
  for (std::size_t i = 0; i < H.size(); ++i) {
    const PartialBijection& phi = H[i];
    for (Elem r : S.nonzero())
      if (phi.defined(r))
        check(sigma_action(S, phi, divisors(S, r)) == divisors(S, phi(r)),
              [&] { return "phi(delta_r) != delta_phi(r) at phi=" + c.pb(phi) + " r=" + c.el(r); });
    const PartialBijection inv = pb_invert(phi);
    for (const auto& sigma : strings) {
      if (!in_sigma_domain(S, phi, sigma)) continue;
      StringSet img = sigma_action(S, phi, sigma);
      check(in_sigma_domain(S, inv, img) && sigma_action(S, inv, img) == sigma,
            [&] { return "inverse does not undo phi=" + c.pb(phi) + " on " + c.set(sigma); });
    }
    for (std::size_t j = 0; j < H.size(); ++j) {
      const PartialBijection comp = pb_compose(phi, H[j]);
      for (const auto& sigma : strings) {
        const bool both = in_sigma_domain(S, H[j], sigma) && in_sigma_domain(S, phi, sigma_action(S, H[j], sigma));
        check(in_sigma_domain(S, comp, sigma) == both &&
                  (!both || sigma_action(S, comp, sigma) == sigma_action(S, phi, sigma_action(S, H[j], sigma))),
              [&] { return "composition law fails at " + c.pb(phi) + " . " + c.pb(H[j]) + " on " + c.set(sigma); });
      }
    }
  }
}

void tight_ultra(Ctx& c, Checker& check) {
  const Semilattice& E = c.spectrum().E;
  for (const auto& phi : c.characters()) {
    const bool tight = is_tight(E, phi, c.opts.max_cover);
    check(tight == is_ultra(E, filter_of(phi)), [&] { return "tight != ultra at " + c.chr(phi); });
  }
}

void pi_tight_atoms(Ctx& c, Checker& check) {
  const Spectrum& sp = c.spectrum();
  const SetRepresentation reps[] = {identity_representation(sp.E, c.S.size()),
                                    epsilon_representation(c.S, sp.E, sp.strings)};
  const char* labels[] = {"identity", "epsilon"};
  for (int k = 0; k < 2; ++k) {
    const auto& pi = reps[k];
    check(representation_atoms(pi) == representation_atoms_by_closure(pi),
          [&] { return std::string("atoms differ for the ") + labels[k] + " representation"; });
    auto atoms = pi_tight_characters(sp.E, pi);
    std::set<Character> by_atoms(atoms.begin(), atoms.end());
    for (const auto& phi : c.characters())
      check(by_atoms.count(phi) == static_cast<std::size_t>(is_pi_tight(sp.E, pi, phi)),
            [&] { return std::string(labels[k]) + " representation disagrees at " + c.chr(phi); });
  }
}

void open_character_bound(Ctx& c, Checker& check) {
  const Spectrum& sp = c.spectrum();
  for (const auto& phi : c.characters()) {
    if (!classify_character(c.S, sp, phi).open) continue;
    Character bound = phi_from_string(c.S, sp, sigma_from_char(c.S, sp, phi));
    check(char_leq(phi, bound), [&] { return c.chr(phi) + " is not below phi of its string"; });
  }
}

void open_maximal_ultra(Ctx& c, Checker& check) {
  const Spectrum& sp = c.spectrum();
  for (const auto& sigma : sp.strings)
    if (is_open(c.S, sigma) && is_maximal_string(c.S, sigma))
      check(is_ultra(sp.E, filter_of(phi_from_string(c.S, sp, sigma))),
            [&] { return "open maximal " + c.set(sigma) + " gives a non-ultra character"; });
}

void relatively_maximal_ultra(Ctx& c, Checker& check) {
  const Semigroup& S = c.S;
  const Spectrum& sp = c.spectrum();
  for (Elem l1 : S.nonzero())
    for (Elem l2 : S.nonzero()) {
      if (l2 < l1) continue;
      const ElemSet lambda = normalized({l1, l2});
      const ElemSet F = F_lambda(S, lambda);
      for (const auto& sigma : sp.strings) {
        if (!is_open(S, sigma) || !set_subset(sigma, F)) continue;
        bool relmax = true;
        for (const auto& mu : sp.strings)
          if (mu != sigma && set_subset(sigma, mu) && set_subset(mu, F)) relmax = false;
        if (relmax)
          check(is_ultra(sp.E, filter_of(phi_from_string(S, sp, sigma))),
                [&] { return c.set(sigma) + " maximal in F_" + c.set(lambda) + " gives a non-ultra character"; });
      }
    }
}

void ultra_partition(Ctx& c, Checker& check) {
  const Semigroup& S = c.S;
  const Spectrum& sp = c.spectrum();
  Census census = ultra_census(S, sp);
  std::set<Character> seen;
  for (const auto& o : census.open) {
    check(o.phi == phi_from_string(S, sp, o.sigma) && is_open(S, o.sigma),
          [&] { return "open entry " + c.set(o.sigma) + " is inconsistent"; });
    check(seen.insert(o.phi).second, [&] { return c.chr(o.phi) + " listed twice"; });
  }
  std::set<std::pair<Elem, Character>> pairs;
  for (const auto& n : census.nonopen) {
    check(classify_character(S, sp, n.ground).ground && is_ultra(sp.E, filter_of(n.ground)),
          [&] { return "ground part of " + c.chr(n.phi) + " is not a ground ultracharacter"; });
    check((n.u == kOne ? n.ground : dual_theta(S, sp, n.u, n.ground)) == n.phi,
          [&] { return "non-open entry " + c.chr(n.phi) + " does not decompose through u=" + c.el(n.u); });
    Decomposition d = nonopen_decomposition(S, sp, n.phi);
    check(d.u == n.u && d.ground == n.ground, [&] { return "decomposition of " + c.chr(n.phi) + " is not unique"; });
    check(seen.insert(n.phi).second, [&] { return c.chr(n.phi) + " listed twice"; });
    check(pairs.insert({n.u, n.ground}).second, [&] { return "pair repeated for u=" + c.el(n.u); });
  }
  check(seen == std::set<Character>(census.ultras.begin(), census.ultras.end()),
        [&] { return std::string("open and non-open parts do not cover the ultracharacters"); });
}

void string_lcm_closure(Ctx& c, Checker& check) {
  const Semigroup& S = c.S;
  const Spectrum& sp = c.spectrum();
  for (const auto& phi : c.characters()) {
    ElemSet sigma = sigma_from_char(S, sp, phi);
    if (sigma.empty()) continue;
    check(is_string(S, sigma), [&] { return c.set(sigma) + " from " + c.chr(phi) + " is not a string"; });
    for (Elem s : sigma)
      for (Elem t : sigma)
        check(set_contains(sigma, *lcm(S, s, t)),
              [&] { return c.set(sigma) + " misses lcm(" + c.el(s) + ", " + c.el(t) + ")"; });
  }
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> list = {
      {"associativity", {}, associativity},
      {"orthogonal-idempotents", {kLeftCancel, kReductive}, orthogonal_idempotents},
      {"idempotent-absorption", {kLeftCancel}, idempotent_absorption},
      {"lcm-ideals", {}, lcm_ideals},
      {"local-units", {kLeftCancel}, local_units},
      {"degenerate-elements", {}, degenerate_elements},
      {"representation-law", {kLeftCancel}, representation_law},
      {"covariance", {kLeftCancel}, covariance},
      {"hull-closure", {kLeftCancel}, hull_closure},
      {"constructible-fixed-point", {kLeftCancel}, constructible_fixed_point},
      {"constructible-ideals", {kLeftCancel, kCategorical}, constructible_ideals},
      {"normal-form-product", {kLeftCancel, kLcms}, normal_form_product},
      {"zero-e-unitary", {kLeftCancel, kRightCancel, kLcms}, zero_e_unitary},
      {"categorical-hull-shape", {kLeftCancel, kCategorical, kReductive, kLocalUnits, kLcms}, categorical_hull_shape},
      {"star-action", {kLeftCancel}, star_action},
      {"epsilon-homomorphism", {kLeftCancel}, epsilon_homomorphism},
      {"sigma-action", {kLeftCancel}, sigma_action_laws},
      {"tight-ultra", {kLeftCancel}, tight_ultra},
      {"pi-tight-atoms", {kLeftCancel, kSmallE}, pi_tight_atoms},
      {"open-character-bound", {kLeftCancel, kLcms}, open_character_bound},
      {"open-maximal-ultra", {kLeftCancel, kLcms}, open_maximal_ultra},
      {"relatively-maximal-ultra", {kLeftCancel, kLcms}, relatively_maximal_ultra},
      {"ultra-partition", {kLeftCancel, kLcms}, ultra_partition},
      {"string-lcm-closure", {kLeftCancel, kLcms}, string_lcm_closure},
  };
  return list;
}

std::vector<std::string> split_selector(const std::string& sel) {
  std::vector<std::string> out;
  std::stringstream in(sel);
  for (std::string part; std::getline(in, part, ',');)
    if (!part.empty()) out.push_back(part);
  return out;
}

}  // namespace

const char* suite_status_name(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::Pass: return "PASS";
    case SuiteStatus::Fail: return "FAIL";
    case SuiteStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : suites()) out.push_back(s.name);
  return out;
}

std::vector<SuiteResult> run_suites(const Semigroup& S, const std::string& selector, const VerifyOptions& opts) {
  std::set<std::string> wanted;
  if (!selector.empty() && selector != "all") {
    auto known = suite_names();
    for (const auto& name : split_selector(selector)) {
      if (std::find(known.begin(), known.end(), name) == known.end())
        throw Error(ErrorKind::Input, "unknown suite '" + name + "'");
      wanted.insert(name);
    }
  }
  Ctx ctx(S, opts);
  std::vector<SuiteResult> out;
  for (const auto& suite : suites()) {
    if (!wanted.empty() && !wanted.count(suite.name)) continue;
    SuiteResult r;
    r.name = suite.name;
    for (const auto& [label, holds] : suite.needs)
      if (!holds(ctx)) {
        r.status = SuiteStatus::Skipped;
        r.detail = "needs " + label;
        break;
      }
    if (r.status != SuiteStatus::Skipped) {
      Checker check;
      try {
        suite.body(ctx, check);
      } catch (const Failure& f) {
        r.status = SuiteStatus::Fail;
        r.detail = f.what;
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::Cap || e.kind() == ErrorKind::Budget) throw;
        r.status = SuiteStatus::Fail;
        r.detail = std::string("error: ") + e.what();
      }
      r.checks = check.n;
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ihull
