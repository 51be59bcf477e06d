#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "surreal/errors.hpp"
#include "surreal/sampling.hpp"
#include "surreal/surreal.hpp"

using namespace surreal;

namespace {
const Ordinal w = Ordinal::omega();
Surreal S(const char* s) { return parse_signs(s); }
Surreal D(const char* s) { return from_dyadic(parse_dyadic(s)); }
}  // namespace

TEST_CASE("normalization merges runs and keeps uniqueness") {
  Surreal a = Surreal::from_runs({Run{1, Ordinal(2)}, Run{1, Ordinal(3)}});
  CHECK(a == S("+^5"));
  Surreal b = Surreal::from_runs({Run{1, w}, Run{1, Ordinal(1)}});
  CHECK(b == S("+^(w+1)"));
  CHECK(Surreal::from_runs({}) == Surreal());
}

TEST_CASE("sign_at pads with zero") {
  CHECK(sign_at(S("+-"), Ordinal(0)) == 1);
  CHECK(sign_at(S("+-"), Ordinal(1)) == -1);
  CHECK(sign_at(S("+-"), Ordinal(5)) == 0);
  CHECK(sign_at(S("+^w -"), w) == -1);
  CHECK(sign_at(S("+^w -"), Ordinal(3)) == 1);
}

TEST_CASE("lexicographic comparison") {
  CHECK(compare(S("+-"), S("+")) == Cmp::LT);
  CHECK(compare(S("+^w -"), S("+^w")) == Cmp::LT);
  CHECK(compare(S("+-"), S("+-")) == Cmp::EQ);
  CHECK(compare(S("-"), S("+")) == Cmp::LT);
  CHECK(compare(Surreal(), S("-")) == Cmp::GT);
  CHECK(compare(S("+^w"), S("+^(w+1)")) == Cmp::LT);
  CHECK(compare(S("+^w -^w"), S("+^w -^3")) == Cmp::LT);
}

TEST_CASE("value order is total on an enumerated set") {
  auto xs = enumerate_up_to_length(5);
  for (const auto& a : xs)
    for (const auto& b : xs) {
      Cmp ab = compare(a, b), ba = compare(b, a);
      if (ab == Cmp::EQ) {
        CHECK(a == b);
        CHECK(ba == Cmp::EQ);
      } else {
        CHECK(ab != ba);
      }
    }
}

TEST_CASE("simplicity is truncation") {
  CHECK(is_simpler(S("+"), S("+-")));
  CHECK(is_simpler(Surreal(), S("-^w")));
  CHECK(is_simpler(S("+^w"), S("+^(w+1)")));
  CHECK(!is_simpler(S("+-"), S("++")));
  CHECK(!is_simpler(S("+-"), S("+")));
  CHECK(is_simpler(S("+-"), S("+-")));
  CHECK(is_simpler(S("+^w"), S("+^w -^w")));
}

TEST_CASE("restriction") {
  CHECK(restrict_to(S("+^w -^w"), w) == S("+^w"));
  CHECK(restrict_to(S("+-"), Ordinal(1)) == S("+"));
  CHECK(restrict_to(S("+-"), Ordinal(9)) == S("+-"));
  CHECK(restrict_to(S("+^(w+1)"), w) == S("+^w"));
  Sampler sampler(7);
  for (int i = 0; i < 200; ++i) {
    Surreal x = sampler.surreal();
    Ordinal a = sampler.ordinal();
    CHECK(restrict_to(x, x.length()) == x);
    CHECK(restrict_to(x, a).length() == ord_min(a, x.length()));
    CHECK(is_simpler(restrict_to(x, a), x));
  }
}

TEST_CASE("common prefix") {
  CHECK(common_prefix(S("+-"), S("++")) == S("+"));
  CHECK(common_prefix(S("+^w -"), S("+^w +")) == S("+^w"));
  CHECK(common_prefix(S("+"), S("-")) == Surreal());
  CHECK(common_prefix(S("+^(w+2)"), S("+^w -")) == S("+^w"));
}

TEST_CASE("simplicity transfer across non-prefixes") {
  // For x simpler than y and x not simpler than z: z compares the same way
  // with x as with y.
  auto xs = enumerate_up_to_length(5);
  for (const auto& y : xs)
    for (const auto& z : xs) {
      for (std::uint64_t l = 0; l < y.length().finite_value(); ++l) {
        Surreal x = restrict_to(y, Ordinal(l));
        if (is_simpler(x, z)) continue;
        CHECK((compare(x, z) == Cmp::LT) == (compare(y, z) == Cmp::LT));
        CHECK((compare(z, x) == Cmp::LT) == (compare(z, y) == Cmp::LT));
      }
    }
}

TEST_CASE("suprema of chains") {
  CHECK(sup_chain({S("+"), S("++"), S("+++")}) == S("+++"));
  CHECK(sup_chain({S("+-")}) == S("+-"));
  CHECK_THROWS_AS(sup_chain({S("+"), S("-")}), Error);
  CHECK(sup_chain([](int n) { return from_int(n); },
                  from_ordinal(w)) == from_ordinal(w));
  // Alternating blocks grow a run per step: no finite run list is a valid
  // pointwise union, so any offered hint must be rejected.
  auto alternating = [](int n) {
    std::vector<Run> runs;
    for (int i = 0; i <= n; ++i) {
      runs.push_back(Run{1, Ordinal(1)});
      runs.push_back(Run{-1, Ordinal(1)});
    }
    return Surreal::from_runs(std::move(runs));
  };
  CHECK_THROWS_AS(sup_chain(alternating, S("+-+-+-+-+-+-+-+-+-+-")), Error);
  CHECK_THROWS_AS(sup_chain(alternating, S("+^w")), Error);
}

TEST_CASE("canonical options of small numbers") {
  auto half = canonical_options(S("+-"));
  REQUIRE(half.left.single.has_value());
  REQUIRE(half.right.single.has_value());
  CHECK(*half.left.single == Surreal());
  CHECK(*half.right.single == S("+"));
  CHECK(!half.left.chain);
  CHECK(!half.right.chain);

  auto zero = canonical_options(Surreal());
  CHECK(zero.left.empty());
  CHECK(zero.right.empty());

  auto omega = canonical_options(S("+^w"));
  CHECK(!omega.left.single);
  REQUIRE(omega.left.chain.has_value());
  CHECK(omega.right.empty());
  CHECK(omega.left.chain->gen(3) == S("+^3"));
  REQUIRE(omega.left.chain->sup.has_value());
  CHECK(*omega.left.chain->sup == S("+^w"));
  omega.left.chain->verify();

  auto womega = canonical_options(S("+^w -^w"));
  REQUIRE(womega.left.chain.has_value());
  REQUIRE(womega.right.chain.has_value());
  CHECK(womega.right.chain->gen(2) == S("+^w -^2"));
  CHECK(*womega.right.chain->sup == S("+^w -^w"));
  CHECK(womega.left.chain->gen(2) == S("++"));

  auto succ = canonical_options(S("+^(w+1)"));
  REQUIRE(succ.left.single.has_value());
  CHECK(*succ.left.single == S("+^w"));
}

TEST_CASE("exhaustive options partition the prefixes") {
  auto opts = exhaustive_options(S("+-"));
  REQUIRE(opts.left.size() == 1);
  REQUIRE(opts.right.size() == 1);
  CHECK(opts.left[0] == Surreal());
  CHECK(opts.right[0] == S("+"));
  auto xs = enumerate_up_to_length(6);
  for (const auto& x : xs) {
    auto o = exhaustive_options(x);
    CHECK(o.left.size() + o.right.size() == x.length().finite_value());
    for (const auto& l : o.left) CHECK(compare(l, x) == Cmp::LT);
    for (const auto& r : o.right) CHECK(compare(r, x) == Cmp::GT);
  }
}

TEST_CASE("dyadic valuation") {
  CHECK(to_dyadic(S("+-")) == Dyadic(1, 1));
  CHECK(to_dyadic(S("+-+-+")) == Dyadic(11, 4));
  CHECK(to_dyadic(S("++-")) == Dyadic(3, 1));
  CHECK(to_dyadic(Surreal()) == Dyadic());
  CHECK(to_dyadic(S("-^3")) == Dyadic(-3));
  CHECK_THROWS_AS(to_dyadic(S("+^w")), Error);
  CHECK(D("11/16") == S("+-+-+"));
  CHECK(D("-3/4") == S("-+-"));
}

TEST_CASE("dyadic round trips") {
  // Every dyadic with exponent <= 12 and small numerator.
  for (int e = 0; e <= 12; ++e) {
    std::int64_t den = std::int64_t(1) << e;
    for (std::int64_t num = -3 * den; num <= 3 * den; ++num) {
      Dyadic d(num, e);
      CHECK(to_dyadic(from_dyadic(d)) == d);
    }
  }
  auto xs = enumerate_up_to_length(8);
  for (const auto& x : xs) CHECK(from_dyadic(to_dyadic(x)) == x);
}

TEST_CASE("valuation is an order isomorphism on the dyadics") {
  auto xs = enumerate_up_to_length(7);
  for (const auto& a : xs)
    for (const auto& b : xs) {
      auto dc = to_dyadic(a) <=> to_dyadic(b);
      Cmp sc = compare(a, b);
      CHECK((dc < 0) == (sc == Cmp::LT));
      CHECK((dc == 0) == (sc == Cmp::EQ));
    }
}

TEST_CASE("ordinal embedding") {
  CHECK(from_ordinal(w) == S("+^w"));
  CHECK(from_ordinal(Ordinal()) == Surreal());
  CHECK(to_ordinal(S("+^(w^2+3)")) == parse_ordinal("w^2+3"));
  CHECK_THROWS_AS(to_ordinal(S("+-")), Error);
  Sampler sampler(11);
  for (int i = 0; i < 100; ++i) {
    Ordinal a = sampler.ordinal();
    CHECK(to_ordinal(from_ordinal(a)) == a);
  }
}

TEST_CASE("length adds over runs in order") {
  CHECK(S("+^w -^3 +").length() == parse_ordinal("w+4"));
  CHECK(S("+^w -^w").length() == parse_ordinal("w*2"));
  CHECK(Surreal().length() == Ordinal(0));
}

TEST_CASE("sign string round trip is bit exact") {
  for (const char* s : {"0", "+", "-", "+^w -^3 +", "+^(w+1)", "+^w -^w",
                        "+^(w^2*3+w+1) - +^2", "-^w +"}) {
    Surreal x = parse_signs(s);
    CHECK(to_string(x) == s);
    CHECK(parse_signs(to_string(x)) == x);
  }
}
