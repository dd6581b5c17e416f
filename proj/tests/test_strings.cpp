#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ihull/constructors.hpp"
#include "ihull/strings.hpp"
#include "support.hpp"

using namespace ihull;
using support::id;
using support::names_to_set;

namespace {

StringSet delta(const Semigroup& S, const std::string& s) { return divisors(S, id(S, s)); }

std::vector<support::Case> cancellative_corpus() {
  std::vector<support::Case> out;
  for (auto& c : support::corpus())
    if (property_flags(c.S).zero_left_cancellative) out.push_back(std::move(c));
  return out;
}

}  // namespace

TEST_CASE("is_string") {
  Semigroup A = fixtures::fixture_a();
  CHECK(is_string(A, names_to_set(A, {"1", "a"})));
  CHECK_FALSE(is_string(A, {}));
  CHECK_FALSE(is_string(A, names_to_set(A, {"a", "aa"})));
}

TEST_CASE("string lists") {
  Semigroup A = fixtures::fixture_a();
  CHECK(all_strings(A) == std::vector<StringSet>{delta(A, "1"), delta(A, "a"), delta(A, "aa")});

  Semigroup L = fixtures::language_abaaba();
  std::vector<StringSet> expect{names_to_set(L, {"a"}), names_to_set(L, {"b"}), names_to_set(L, {"a", "aa"}),
                                names_to_set(L, {"b", "ba"})};
  CHECK(all_strings(L) == expect);
  CHECK(maximal_strings(L) == std::vector<StringSet>{names_to_set(L, {"a", "aa"}), names_to_set(L, {"b", "ba"})});

  Semigroup B = fixtures::fixture_b();
  CHECK(all_strings(B) == std::vector<StringSet>{names_to_set(B, {"e"}), names_to_set(B, {"s"})});
}

TEST_CASE("strings of a finite semigroup are exactly the divisor sets") {
  for (const auto& c : support::corpus()) {
    if (c.S.nonzero().size() > 12) continue;
    CAPTURE(c.name);
    auto mine = all_strings(c.S);
    std::set<StringSet> as_set(mine.begin(), mine.end());
    CHECK(as_set.size() == mine.size());
    CHECK(as_set == support::oracle_strings(c.S));
    auto brute = all_strings_bruteforce(c.S);
    CHECK(std::set<StringSet>(brute.begin(), brute.end()) == as_set);
  }
  CHECK_THROWS_AS(all_strings_bruteforce(word_truncation({"a", "b"}, 3)), Error);
}

TEST_CASE("interior and openness") {
  Semigroup L = fixtures::language_abaaba();
  CHECK(interior(L, names_to_set(L, {"a", "aa"})) == names_to_set(L, {"a"}));
  CHECK_FALSE(is_open(L, names_to_set(L, {"a", "aa"})));
  Semigroup A = fixtures::fixture_a();
  CHECK(is_open(A, delta(A, "aa")));

  for (const auto& c : support::corpus()) {
    CAPTURE(c.name);
    const Semigroup& S = c.S;
    const bool local_units = property_flags(S).right_local_units;
    for (const auto& sigma : all_strings(S)) {
      if (local_units) CHECK(is_open(S, sigma));
      if (is_open(S, sigma)) continue;
      // non-open strings are delta_r for exactly one r outside rS
      int witnesses = 0;
      for (Elem r : S.nonzero())
        if (divisors(S, r) == sigma && !set_contains(S.right_ideal(r), r)) ++witnesses;
      CHECK(witnesses == 1);
    }
  }
}

TEST_CASE("star action examples") {
  Semigroup L = fixtures::language_abaaba();
  StringSet back = star_backward(L, id(L, "b"), names_to_set(L, {"b", "ba"}));
  CHECK(back == names_to_set(L, {"a"}));
  CHECK_FALSE(is_maximal_string(L, back));
  CHECK_THROWS_AS(star_forward(L, id(L, "a"), names_to_set(L, {"b"})), Error);
  CHECK_THROWS_AS(star_backward(L, id(L, "a"), names_to_set(L, {"b"})), Error);

  Semigroup A = fixtures::fixture_a();
  StarDomains d = star_domains(A, id(A, "a"));
  CHECK(d.E == std::vector<StringSet>{delta(A, "a"), delta(A, "aa")});
  CHECK(d.F == std::vector<StringSet>{delta(A, "1"), delta(A, "a")});
  CHECK(star_domains(A, A.zero()).F.empty());
}

TEST_CASE("star action laws over the corpus") {
  for (const auto& c : cancellative_corpus()) {
    CAPTURE(c.name);
    const Semigroup& S = c.S;
    const bool categorical = property_flags(S).categorical_at_zero;
    for (Elem r = 0; r < S.size(); ++r) {
      StarDomains d = star_domains(S, r);
      for (Elem s : S.nonzero())
        if (S.mul(r, s) != S.zero()) CHECK(star_forward(S, r, divisors(S, s)) == divisors(S, S.mul(r, s)));
      std::set<StringSet> images;
      for (const auto& sigma : d.F) {
        StringSet img = star_forward(S, r, sigma);
        CHECK(is_string(S, img));
        CHECK(in_E_star(S, r, img));
        CHECK(star_backward(S, r, img) == sigma);
        images.insert(img);
        if (is_maximal_string(S, sigma)) CHECK(is_maximal_string(S, img));
        if (is_open(S, sigma)) CHECK(is_open(S, img));
        for (Elem r2 = 0; r2 < S.size(); ++r2)
          if (in_F_star(S, r2, img)) CHECK(star_forward(S, r2, img) == star_forward(S, S.mul(r2, r), sigma));
      }
      CHECK(images == std::set<StringSet>(d.E.begin(), d.E.end()));
      for (const auto& sigma : d.E) {
        StringSet pre = star_backward(S, r, sigma);
        CHECK(star_forward(S, r, pre) == sigma);
        if (is_open(S, sigma)) CHECK(is_open(S, pre));
        if (categorical && is_maximal_string(S, sigma)) CHECK(is_maximal_string(S, pre));
      }
    }
  }
}

TEST_CASE("backward invariance needs categoricity") {
  Semigroup L = fixtures::language_abaaba();
  CHECK_FALSE(property_flags(L).categorical_at_zero);
  StringSet sigma = names_to_set(L, {"b", "ba"});
  CHECK(is_maximal_string(L, sigma));
  CHECK_FALSE(is_maximal_string(L, star_backward(L, id(L, "b"), sigma)));
}

TEST_CASE("classify_string") {
  Semigroup N = fixtures::nilpotent();
  CHECK(classify_string(N, names_to_set(N, {"x"})).degenerate);
  Semigroup B = fixtures::fixture_b();
  CHECK(classify_string(B, names_to_set(B, {"s"})).prime_singleton);
  Semigroup A = fixtures::fixture_a();
  StringClass c = classify_string(A, delta(A, "aa"));
  CHECK(c.open);
  CHECK(c.maximal);
  CHECK_THROWS_AS(classify_string(A, names_to_set(A, {"aa"})), Error);
  for (const auto& cs : support::corpus())
    for (Elem s : cs.S.nonzero())
      if (is_string(cs.S, {s})) CHECK(classify_string(cs.S, {s}).prime_singleton == classify_element(cs.S, s).prime);
}

TEST_CASE("hereditary closure and asymptotic containment") {
  Semigroup A = fixtures::fixture_a();
  CHECK(hereditary_closure(A, names_to_set(A, {"aa"})) == names_to_set(A, {"1", "a", "aa"}));
  CHECK(asymptotically_contained(A, delta(A, "aa"), E_set(A, id(A, "a"))));
  CHECK_THROWS_AS(asymptotically_contained(fixtures::language_abaaba(), {1, 2}, {}), Error);
  for (const auto& c : support::corpus())
    for (const auto& sigma : all_strings(c.S)) {
      CHECK(hereditary_closure(c.S, sigma) == sigma);
      for (const auto& X : std::vector<ElemSet>{c.S.nonzero(), {}, sigma})
        CHECK(asymptotically_contained(c.S, sigma, X) ==
              (hereditary_closure(c.S, set_intersection(X, sigma)) == sigma));
    }
}

TEST_CASE("sigma action") {
  Semigroup A = fixtures::fixture_a();
  CHECK(sigma_action(A, regular_rep(A, id(A, "a")), delta(A, "1")) == delta(A, "a"));
  Semigroup L = fixtures::language_abaaba();
  PartialBijection ab = pb_compose(regular_rep(L, id(L, "a")), pb_invert(regular_rep(L, id(L, "b"))));
  CHECK(sigma_action(L, ab, names_to_set(L, {"b", "ba"})) == names_to_set(L, {"a", "aa"}));
  CHECK_THROWS_AS(sigma_action(L, ab, names_to_set(L, {"a"})), Error);
}

TEST_CASE("sigma action laws over the corpus") {
  for (const auto& c : cancellative_corpus()) {
    const Semigroup& S = c.S;
    Hull H = generate_hull(S);
    if (H.size() > 120) continue;
    CAPTURE(c.name);
    const auto strings = all_strings(S);
    for (std::size_t i = 0; i < H.size(); ++i) {
      const PartialBijection& phi = H[i];
      // identity-on-X elements fix every string inside X
      if (phi.is_idempotent())
        for (const auto& sigma : strings)
          if (in_sigma_domain(S, phi, sigma)) CHECK(sigma_action(S, phi, sigma) == sigma);
      for (Elem r : S.nonzero()) {
        CHECK(in_sigma_domain(S, phi, divisors(S, r)) == phi.defined(r));
        if (phi.defined(r)) CHECK(sigma_action(S, phi, divisors(S, r)) == divisors(S, phi(r)));
      }
      const PartialBijection inv = pb_invert(phi);
      for (const auto& sigma : strings) {
        if (!in_sigma_domain(S, phi, sigma)) continue;
        StringSet img = sigma_action(S, phi, sigma);
        CHECK(in_sigma_domain(S, inv, img));
        CHECK(sigma_action(S, inv, img) == sigma);
        // h of the raw image is unchanged by closing sigma first
        ElemSet raw;
        for (Elem s : hereditary_closure(S, sigma))
          if (phi.defined(s)) raw.push_back(phi(s));
        CHECK(hereditary_closure(S, normalized(raw)) == img);
      }
      for (std::size_t j = 0; j < H.size(); ++j) {
        const PartialBijection comp = pb_compose(phi, H[j]);
        for (const auto& sigma : strings) {
          bool inner = in_sigma_domain(S, H[j], sigma);
          bool both = inner && in_sigma_domain(S, phi, sigma_action(S, H[j], sigma));
          CHECK(in_sigma_domain(S, comp, sigma) == both);
          if (both) CHECK(sigma_action(S, comp, sigma) == sigma_action(S, phi, sigma_action(S, H[j], sigma)));
        }
      }
    }
    for (Elem s = 0; s < S.size(); ++s)
      for (const auto& sigma : star_domains(S, s).F)
        CHECK(sigma_action(S, regular_rep(S, s), sigma) == star_forward(S, s, sigma));
  }
}

TEST_CASE("epsilon") {
  Semigroup A = fixtures::fixture_a();
  auto cons = constructible_sets(A);
  CHECK(epsilon(A, cons, E_set(A, id(A, "a"))) == std::vector<StringSet>{delta(A, "a"), delta(A, "aa")});
  CHECK(epsilon(A, cons, {}).empty());
  CHECK_THROWS_AS(epsilon(A, cons, names_to_set(A, {"1", "aa"})), Error);
  Semigroup L = fixtures::language_abaaba();
  CHECK(epsilon(L, constructible_sets(L), names_to_set(L, {"a"})) ==
        std::vector<StringSet>{names_to_set(L, {"a"})});
}

TEST_CASE("epsilon is a semilattice map matching the star domains") {
  for (const auto& c : cancellative_corpus()) {
    const Semigroup& S = c.S;
    CAPTURE(c.name);
    auto cons = constructible_sets(S);
    auto as_set = [](const std::vector<StringSet>& v) { return std::set<StringSet>(v.begin(), v.end()); };
    for (const auto& X : cons)
      for (const auto& Y : cons) {
        std::set<StringSet> both;
        auto ex = as_set(epsilon(S, X)), ey = as_set(epsilon(S, Y));
        std::set_intersection(ex.begin(), ex.end(), ey.begin(), ey.end(), std::inserter(both, both.end()));
        CHECK(as_set(epsilon(S, set_intersection(X, Y))) == both);
      }
    for (Elem r = 0; r < S.size(); ++r) {
      CHECK(as_set(epsilon(S, E_set(S, r))) == as_set(star_domains(S, r).E));
      CHECK(as_set(epsilon(S, F_set(S, r))) == as_set(star_domains(S, r).F));
    }
    // epsilon(theta_u(F_Lambda)) = theta*_u(F*_Lambda) for small Lambda
    for (Elem u = 0; u < S.size(); ++u)
      for (Elem l1 = 0; l1 < S.size(); ++l1) {
        ElemSet lambda = normalized({u, l1});
        ElemSet X = forward_image(S, u, F_lambda(S, lambda));
        CHECK(as_set(epsilon(S, X)) == as_set(image_of_F_star(S, u, lambda)));
        std::set<StringSet> direct;
        for (const auto& sigma : f_star_lambda(S, lambda)) direct.insert(star_forward(S, u, sigma));
        CHECK(as_set(image_of_F_star(S, u, lambda)) == direct);
      }
  }
}

TEST_CASE("length function") {
  Semigroup A = fixtures::language_abaaba();
  CHECK(word_length(A, id(A, "aa")) == 2);
  CHECK(is_bounded(A, names_to_set(A, {"a", "aa"}), 2));
  CHECK_FALSE(is_bounded(A, names_to_set(A, {"a", "aa"}), 1));
  CHECK_THROWS_AS(word_length(fixtures::fixture_a(), 1), Error);
  for (const auto& c : support::random_languages(6, 5))
    for (Elem r : c.S.nonzero())
      for (Elem s : c.S.nonzero())
        if (c.S.mul(r, s) != c.S.zero())
          CHECK(word_length(c.S, c.S.mul(r, s)) == word_length(c.S, r) + word_length(c.S, s));
}
