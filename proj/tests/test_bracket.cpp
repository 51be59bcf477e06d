#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>

#include "surreal/bracket.hpp"
#include "surreal/errors.hpp"
#include "surreal/sampling.hpp"

using namespace surreal;

namespace {

Surreal S(const char* s) { return parse_signs(s); }

// Independent oracle: the simplest dyadic strictly inside an open interval,
// found by descending the binary value tree with pure rational arithmetic.
Dyadic simplest_dyadic_between(std::optional<Dyadic> lo,
                               std::optional<Dyadic> hi) {
  std::vector<int> signs;
  for (int steps = 0; steps < 1000; ++steps) {
    // Value of the sign vector by the halving rule.
    Dyadic v;
    int leading = 1;
    std::size_t i = 0;
    while (i < signs.size() && signs[i] == signs[0]) ++i;
    if (!signs.empty()) {
      leading = signs[0];
      v = Dyadic(static_cast<std::int64_t>(i) * leading);
    }
    int k = 0;
    for (std::size_t j = i; j < signs.size(); ++j) {
      ++k;
      v = signs[j] > 0 ? v + Dyadic::half_pow(k) : v - Dyadic::half_pow(k);
    }
    bool above_lo = !lo || *lo < v;
    bool below_hi = !hi || v < *hi;
    if (above_lo && below_hi) return v;
    signs.push_back(above_lo ? -1 : 1);
  }
  throw std::runtime_error("oracle did not converge");
}

Cut singles(std::vector<Surreal> lows, std::vector<Surreal> highs) {
  Cut cut;
  for (auto& l : lows) cut.add_lower(std::move(l));
  for (auto& r : highs) cut.add_upper(std::move(r));
  return cut;
}

}  // namespace

TEST_CASE("base fixtures") {
  CHECK(simplest_in_cut(singles({}, {})) == Surreal());
  CHECK(simplest_in_cut(singles({Surreal()}, {})) == S("+"));
  CHECK(simplest_in_cut(singles({Surreal()}, {S("+")})) == S("+-"));
  CHECK(simplest_in_cut(singles({}, {Surreal()})) == S("-"));
  CHECK(simplest_in_cut(singles({S("++")}, {})) == S("+++"));
  CHECK(simplest_in_cut(singles({S("--")}, {S("-")})) == S("--+"));
}

TEST_CASE("transfinite fixtures") {
  Cut nats;
  nats.lower.push_back(BoundFamily::of(chain_nats()));
  CHECK(simplest_in_cut(nats) == S("+^w"));

  Cut halfway;  // integers below, w - n above
  halfway.lower.push_back(BoundFamily::of(chain_nats()));
  halfway.lower.push_back(BoundFamily::of(chain_neg_nats()));
  halfway.upper.push_back(BoundFamily::of(chain_omega_minus_nats()));
  CHECK(simplest_in_cut(halfway) == S("+^w -^w"));

  Cut tiny;  // 0 below, 2^-n above
  tiny.add_lower(Surreal());
  tiny.upper.push_back(BoundFamily::of(chain_half_powers()));
  CHECK(simplest_in_cut(tiny) == S("+ -^w"));

  Cut next;  // above every w - n yet below w: splits the top gap at w - 1/2
  next.lower.push_back(BoundFamily::of(chain_omega_minus_nats()));
  next.upper.push_back(
      BoundFamily::of(Surreal::from_runs({Run{1, Ordinal::omega()}})));
  CHECK(simplest_in_cut(next) == S("+^w - +"));
}

TEST_CASE("engine matches the dyadic interval oracle exhaustively") {
  auto xs = enumerate_up_to_length(5);
  // Single bounds on either side, including empty sides.
  for (const auto& a : xs) {
    CHECK(to_dyadic(simplest_in_cut(singles({a}, {}))) ==
          simplest_dyadic_between(to_dyadic(a), std::nullopt));
    CHECK(to_dyadic(simplest_in_cut(singles({}, {a}))) ==
          simplest_dyadic_between(std::nullopt, to_dyadic(a)));
    for (const auto& b : xs) {
      if (compare(a, b) != Cmp::LT) continue;
      CHECK(to_dyadic(simplest_in_cut(singles({a}, {b}))) ==
            simplest_dyadic_between(to_dyadic(a), to_dyadic(b)));
    }
  }
}

TEST_CASE("engine matches the oracle on random multi-bound cuts") {
  Sampler sampler(12345);
  int done = 0;
  while (done < 10000) {
    int nl = sampler.uniform(0, 3), nr = sampler.uniform(0, 3);
    std::vector<Surreal> lows, highs;
    std::optional<Dyadic> lo, hi;
    for (int i = 0; i < nl; ++i) {
      Surreal x = sampler.dyadic_surreal(8);
      Dyadic d = to_dyadic(x);
      if (!lo || *lo < d) lo = d;
      lows.push_back(std::move(x));
    }
    for (int i = 0; i < nr; ++i) {
      Surreal x = sampler.dyadic_surreal(8);
      Dyadic d = to_dyadic(x);
      if (!hi || d < *hi) hi = d;
      highs.push_back(std::move(x));
    }
    if (lo && hi && !(*lo < *hi)) continue;
    ++done;
    CHECK(to_dyadic(simplest_in_cut(singles(lows, highs))) ==
          simplest_dyadic_between(lo, hi));
  }
}

TEST_CASE("inconsistent cuts are rejected lazily") {
  CHECK_THROWS_AS(simplest_in_cut(singles({S("+")}, {S("+")})), Error);
  CHECK_THROWS_AS(simplest_in_cut(singles({S("+")}, {Surreal()})), Error);
  CHECK_THROWS_AS(simplest_in_cut(singles({S("+")}, {S("+-")})), Error);
  try {
    simplest_in_cut(singles({S("+")}, {S("+")}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyCut);
  }
}

TEST_CASE("budget bounds the result length") {
  Cut nats;
  nats.lower.push_back(BoundFamily::of(chain_nats()));
  nats.budget = Ordinal(100);
  try {
    simplest_in_cut(nats);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("returned value is simplest among sampled members") {
  Sampler sampler(99);
  for (int trial = 0; trial < 300; ++trial) {
    Surreal a = sampler.dyadic_surreal(7);
    Surreal b = sampler.dyadic_surreal(7);
    if (compare(a, b) != Cmp::LT) continue;
    Surreal root = simplest_in_cut(singles({a}, {b}));
    // Other members of (a, b), found by tightening either side around the
    // root, must extend the root.
    Surreal m1 = simplest_in_cut(singles({a}, {root}));
    Surreal m2 = simplest_in_cut(singles({root}, {b}));
    for (const Surreal& m : {m1, m2}) {
      CHECK(gt(m, a));
      CHECK(lt(m, b));
      CHECK(is_simpler(root, m));
      CHECK(m != root);
    }
  }
}

TEST_CASE("the simplest member is an initial segment of all members") {
  // Stronger, exhaustive form on short dyadic cuts.
  auto xs = enumerate_up_to_length(5);
  for (const auto& a : xs)
    for (const auto& b : xs) {
      if (compare(a, b) != Cmp::LT) continue;
      Surreal root = simplest_in_cut(singles({a}, {b}));
      for (const auto& y : xs)
        if (gt(y, a) && lt(y, b)) CHECK(is_simpler(root, y));
    }
}

TEST_CASE("canonical representation rebuilds the number") {
  // Exhaustive at small finite lengths.
  for (const auto& x : enumerate_up_to_length(8)) {
    auto o = exhaustive_options(x);
    CHECK(simplest_in_cut(singles(o.left, o.right)) == x);
  }
  // Reduced canonical options, including transfinite chain sides.
  Sampler sampler(4242);
  for (int i = 0; i < 300; ++i) {
    Surreal x = sampler.surreal();
    auto o = canonical_options(x);
    Cut cut;
    append_families(cut.lower, o.left);
    append_families(cut.upper, o.right);
    cut.budget = cantor_add(x.length(), Ordinal(1));
    CHECK(simplest_in_cut(cut) == x);
  }
}

TEST_CASE("non-uniformity witness: extra option shifts the cut") {
  // The representation ({|1}) of 0 fed into the successor-style expression
  // {x, x_L | x_R} produces {0 | 1} = 1/2 rather than 1.
  Surreal got = simplest_in_cut(singles({Surreal()}, {S("+")}));
  CHECK(got == S("+-"));
  CHECK(to_dyadic(got) == Dyadic(1, 1));
}

TEST_CASE("cofinality") {
  Cut c01 = singles({Surreal()}, {S("+")});
  CHECK(is_cofinal_wrt(c01, c01));
  CHECK(mutually_cofinal(c01, c01));

  Cut nats;
  nats.lower.push_back(BoundFamily::of(chain_nats()));
  Cut zero = singles({Surreal()}, {});
  CHECK(is_cofinal_wrt(nats, zero));
  CHECK(!is_cofinal_wrt(zero, nats));
  CHECK(!mutually_cofinal(zero, nats));

  // Mutually cofinal pairs produce equal brackets.
  Cut evens;
  evens.lower.push_back(BoundFamily::of(OmegaChain{
      [](int n) { return from_int(2 * n); }, true,
      from_ordinal(Ordinal::omega())}));
  CHECK(mutually_cofinal(nats, evens));
  CHECK(simplest_in_cut(nats) == simplest_in_cut(evens));

  Cut shifted = singles({S("+-")}, {S("+")});   // (1/2 | 1)
  Cut shifted2 = singles({S("+-+")}, {S("+")});  // (3/4 | 1)
  CHECK(is_cofinal_wrt(shifted2, shifted));
  CHECK(!is_cofinal_wrt(shifted, shifted2));
  for (const auto& [a, b] : {std::pair{shifted, shifted2}}) {
    if (mutually_cofinal(a, b))
      CHECK(simplest_in_cut(a) == simplest_in_cut(b));
  }
}

TEST_CASE("verification rejects bad chains") {
  OmegaChain notmono{[](int n) { return from_int(n % 3); }, true,
                     from_ordinal(Ordinal::omega())};
  Cut cut;
  cut.lower.push_back(BoundFamily::of(notmono));
  CHECK_THROWS_AS(simplest_in_cut(cut), Error);

  // Monotone in value but not a simplicity chain.
  OmegaChain notchain{
      [](int n) { return from_dyadic(Dyadic(2 * n + 1, 1)); },  // n + 1/2
      true, from_ordinal(Ordinal::omega())};
  Cut cut2;
  cut2.lower.push_back(BoundFamily::of(notchain));
  CHECK_THROWS_AS(simplest_in_cut(cut2), Error);
}
