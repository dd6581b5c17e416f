#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ihull/hull.hpp"
#include "support.hpp"

using namespace ihull;
using support::id;
using support::names_to_set;

TEST_CASE("validate accepts the prime-but-not-irreducible table") {
  Semigroup S = Semigroup::validate({"0", "e", "s"}, "0",
                                    {{"0", "0", "0"}, {"0", "e", "0"}, {"0", "s", "0"}});
  CHECK(S.size() == 3);
  CHECK(S.mul(id(S, "s"), id(S, "e")) == id(S, "s"));
}

TEST_CASE("validate rejects bad input") {
  CHECK_THROWS_AS(Semigroup::validate({"0", "e", "e"}, "0", {{"0", "0", "0"}, {"0", "e", "0"}, {"0", "e", "0"}}),
                  Error);
  CHECK_THROWS_AS(Semigroup::validate({"0", "e"}, "0", {{"0", "0"}, {"0", "q"}}), Error);
  CHECK_THROWS_AS(Semigroup::validate({"0", "e"}, "0", {{"0", "0"}}), Error);
  CHECK_THROWS_AS(Semigroup::validate({"0", "e"}, "z", {{"0", "0"}, {"0", "e"}}), Error);
  // zero not absorbing
  CHECK_THROWS_AS(Semigroup::validate({"0", "e"}, "0", {{"e", "0"}, {"0", "e"}}), Error);
}

TEST_CASE("mutating a valid table until the triple scan objects") {
  Semigroup A = fixtures::fixture_a();
  const int n = A.size();
  int rejected = 0;
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      for (Elem v = 0; v < n; ++v) {
        if (v == A.mul(i, j)) continue;
        std::vector<Elem> table;
        for (Elem x = 0; x < n; ++x)
          for (Elem y = 0; y < n; ++y) table.push_back(A.mul(x, y));
        table[i * n + j] = v;
        std::vector<std::string> names = A.names();
        Semigroup probe;
        bool threw = false;
        try {
          probe = Semigroup::from_table(names, A.zero(), table);
        } catch (const Error&) {
          threw = true;
        }
        if (!threw) {
          // Accepted tables must really be associative with absorbing zero.
          CHECK(support::oracle_associative(probe));
        } else {
          ++rejected;
        }
      }
  CHECK(rejected > 0);
}

TEST_CASE("associativity error names the triple") {
  try {
    Semigroup::validate({"0", "p", "q"}, "0", {{"0", "0", "0"}, {"0", "q", "p"}, {"0", "p", "p"}});
    FAIL("expected an associativity error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("associativ") != std::string::npos);
  }
}

TEST_CASE("property flags on the named fixtures") {
  PropertyFlags w = property_flags(fixtures::words_len2());
  CHECK_FALSE(w.categorical_at_zero);

  PropertyFlags t = property_flags(fixtures::trivial());
  CHECK(t.zero_left_cancellative);
  CHECK(t.zero_right_cancellative);
  CHECK(t.categorical_at_zero);
  CHECK(t.right_local_units);

  PropertyFlags a = property_flags(fixtures::fixture_a());
  CHECK(a.zero_left_cancellative);
  CHECK_FALSE(a.categorical_at_zero);
  CHECK(a.unital);

  PropertyFlags g = property_flags(fixtures::group_zero_z2());
  CHECK(g.categorical_at_zero);
  CHECK(g.zero_right_cancellative);
}

TEST_CASE("flags agree with literal scans over the corpus") {
  for (const auto& c : support::corpus()) {
    CAPTURE(c.name);
    PropertyFlags f = property_flags(c.S);
    CHECK(f.zero_left_cancellative == support::oracle_zero_left_cancellative(c.S));
    CHECK(f.categorical_at_zero == support::oracle_categorical_at_zero(c.S));
    if (f.unital) CHECK(f.right_local_units);
    bool every_pair = true;
    for (Elem s = 0; s < c.S.size(); ++s)
      for (Elem t = 0; t < c.S.size(); ++t) every_pair = every_pair && !support::oracle_lcms(c.S, s, t).empty();
    CHECK(f.admits_lcms == every_pair);
  }
}

TEST_CASE("classify_element") {
  Semigroup B = fixtures::fixture_b();
  ElementClass s = classify_element(B, id(B, "s"));
  CHECK(s.prime);
  CHECK_FALSE(s.irreducible);

  Semigroup A = fixtures::fixture_a();
  for (Elem x : A.nonzero()) CHECK_FALSE(classify_element(A, x).irreducible);
  CHECK_FALSE(classify_element(A, id(A, "a")).prime);
  CHECK_THROWS_AS(classify_element(A, A.zero()), Error);

  Semigroup N = fixtures::nilpotent();
  CHECK(classify_element(N, id(N, "x")).degenerate);
}

TEST_CASE("divisors and divisibility") {
  Semigroup A = fixtures::fixture_a();
  CHECK(divisors(A, id(A, "aa")) == names_to_set(A, {"1", "a", "aa"}));
  for (Elem s = 0; s < A.size(); ++s) CHECK(divides(A, s, A.zero()));
  Semigroup L = fixtures::language_abaaba();
  CHECK(divisors(L, id(L, "ba")) == names_to_set(L, {"b", "ba"}));
  for (const auto& c : support::corpus())
    for (Elem s = 0; s < c.S.size(); ++s)
      for (Elem t = 0; t < c.S.size(); ++t) CHECK(c.S.divides(s, t) == support::oracle_divides(c.S, s, t));
}

TEST_CASE("lcm examples") {
  Semigroup X = fixtures::no_lcm();
  CHECK_FALSE(lcm(X, id(X, "a"), id(X, "b")).has_value());
  Semigroup A = fixtures::fixture_a();
  CHECK(lcm(A, id(A, "a"), id(A, "a")) == id(A, "a"));
  CHECK(lcm(A, id(A, "a"), id(A, "aa")) == id(A, "aa"));
}

TEST_CASE("lcm invariants over the corpus") {
  for (const auto& c : support::corpus()) {
    CAPTURE(c.name);
    const Semigroup& S = c.S;
    for (Elem s = 0; s < S.size(); ++s)
      for (Elem t = 0; t < S.size(); ++t) {
        ElemSet expect = support::oracle_lcms(S, s, t);
        CHECK(all_lcms(S, s, t) == expect);
        auto r = lcm(S, s, t);
        CHECK(r.has_value() == !expect.empty());
        if (!r) continue;
        CHECK(*r == expect.front());
        CHECK(divides(S, s, *r));
        CHECK(divides(S, t, *r));
        for (Elem r2 : expect) CHECK(S.right_ideal(r2) == S.right_ideal(*r));
      }
  }
}

TEST_CASE("alignment") {
  Semigroup C = fixtures::cat2();
  Alignment st = alignment(C, id(C, "s"), id(C, "t"));
  CHECK(st.kind == Alignment::Kind::Basis);
  CHECK(st.witnesses == names_to_set(C, {"m1", "m2"}));
  CHECK(set_intersection(C.right_ideal(id(C, "s")), C.right_ideal(id(C, "t"))) ==
        names_to_set(C, {"0", "m1", "m2"}));

  Semigroup X = fixtures::no_lcm();
  CHECK(alignment(X, id(X, "a"), id(X, "b")).kind == Alignment::Kind::None);
  CHECK(set_intersection(X.right_ideal(id(X, "a")), X.right_ideal(id(X, "b"))) ==
        names_to_set(X, {"0", "c2"}));
  CHECK(X.right_ideal(id(X, "c")) == names_to_set(X, {"0", "c2"}));

  Semigroup A = fixtures::fixture_a();
  Alignment p = alignment(A, id(A, "a"), id(A, "aa"));
  CHECK(p.kind == Alignment::Kind::Principal);
  CHECK(p.witnesses == ElemSet{id(A, "aa")});
  CHECK_THROWS_AS(alignment(A, A.zero(), id(A, "a")), Error);
}

TEST_CASE("alignment witnesses are common multiples and bases are disjoint") {
  for (const auto& c : support::corpus()) {
    const Semigroup& S = c.S;
    for (Elem s : S.nonzero())
      for (Elem t : S.nonzero()) {
        Alignment a = alignment(S, s, t);
        for (Elem w : a.witnesses) {
          CHECK(support::oracle_divides(S, s, w));
          CHECK(support::oracle_divides(S, t, w));
        }
        if (a.kind == Alignment::Kind::Basis) {
          for (Elem b1 : a.witnesses)
            for (Elem b2 : a.witnesses)
              if (b1 != b2)
                CHECK(set_intersection(S.right_ideal(b1), S.right_ideal(b2)) == ElemSet{S.zero()});
          CHECK(ideal_generated(S, a.witnesses) ==
                set_intersection(S.right_ideal(s), S.right_ideal(t)));
        }
      }
  }
}

TEST_CASE("rees quotient") {
  Semigroup A = fixtures::fixture_a();
  Semigroup Q = rees_quotient(A, {A.zero(), id(A, "aa")});
  CHECK(Q.size() == 3);
  CHECK(Q.mul(id(Q, "a"), id(Q, "a")) == Q.zero());
  Semigroup same = rees_quotient(A, {A.zero()});
  CHECK(same.names() == A.names());
  CHECK_THROWS_AS(rees_quotient(A, {A.zero(), id(A, "a")}), Error);

  // Quotients of 0-left cancellative semigroups stay 0-left cancellative.
  for (const auto& c : support::corpus()) {
    if (!property_flags(c.S).zero_left_cancellative) continue;
    for (Elem x : c.S.nonzero()) {
      ElemSet I{c.S.zero()};
      for (Elem p = 0; p < c.S.size(); ++p)
        for (Elem q = 0; q < c.S.size(); ++q) {
          I.push_back(c.S.mul(c.S.mul(p, x), q));
          I.push_back(c.S.mul(p, x));
          I.push_back(c.S.mul(x, q));
        }
      I.push_back(x);
      I = normalized(I);
      CHECK(property_flags(rees_quotient(c.S, I)).zero_left_cancellative);
    }
  }
}

TEST_CASE("idempotent and local unit invariants") {
  for (const auto& c : support::corpus()) {
    CAPTURE(c.name);
    const Semigroup& S = c.S;
    PropertyFlags f = property_flags(S);
    CHECK(support::oracle_associative(S));
    std::vector<Elem> idem;
    for (Elem e : S.nonzero())
      if (is_idempotent(S, e)) idem.push_back(e);
    if (f.right_reductive && f.zero_left_cancellative)
      for (Elem e : idem)
        for (Elem g : idem)
          if (e != g) CHECK(S.mul(e, g) == S.zero());
    if (f.zero_left_cancellative) {
      for (Elem e : idem)
        for (Elem s : S.nonzero()) CHECK((S.mul(e, s) != S.zero()) == (S.mul(e, s) == s));
      bool all_in = true;
      for (Elem s : S.nonzero()) all_in = all_in && set_contains(S.right_ideal(s), s);
      CHECK(f.right_local_units == all_in);
      for (Elem s : S.nonzero()) {
        auto plus = classify_element(S, s).right_unit;
        CHECK(plus.has_value() == set_contains(S.right_ideal(s), s));
        if (plus) {
          int count = 0;
          for (Elem e : idem) count += S.mul(s, e) == s;
          CHECK(count == 1);
        }
      }
    }
    ElemSet degenerate;
    for (Elem s : S.nonzero())
      if (classify_element(S, s).degenerate) degenerate.push_back(s);
    CHECK(degenerate == set_difference(S.nonzero(), essential_subset(S)));
  }
}

TEST_CASE("the trivial semigroup is vacuous everywhere") {
  Semigroup T = fixtures::trivial();
  CHECK(T.size() == 1);
  CHECK(T.nonzero().empty());
  PropertyFlags f = property_flags(T);
  CHECK(f.admits_lcms);
  CHECK(f.right_reductive);
}
