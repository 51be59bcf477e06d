#include "surreal/bracket.hpp"

#include <algorithm>

#include "surreal/errors.hpp"

namespace surreal {

namespace {

constexpr int kSpotChecks = 8;
constexpr int kMaxIterations = 4096;

// Relationship of x to a bound b along the common prefix.
struct PrefixRelation {
  enum Kind {
    Equal,
    XPrefix,   // x is a proper prefix of b
    BPrefix,   // b is a proper prefix of x
    Diverged,  // signs differ at some shared position
  } kind = Equal;
  // XPrefix: the run of b containing position len(x).
  int cont_sign = 0;
  Ordinal cont_rest;
  bool cont_last = false;
  // BPrefix / Diverged: x's sign at the deciding position.
  int x_sign = 0;
};

PrefixRelation relate(const Surreal& x, const Surreal& b) {
  PrefixRelation rel;
  std::size_t i = 0, j = 0;
  Ordinal rem_x, rem_b;
  bool have_x = false, have_b = false;
  for (;;) {
    if (!have_x && i < x.runs().size()) {
      rem_x = x.runs()[i].length;
      have_x = true;
    }
    if (!have_b && j < b.runs().size()) {
      rem_b = b.runs()[j].length;
      have_b = true;
    }
    if (!have_x && !have_b) {
      rel.kind = PrefixRelation::Equal;
      return rel;
    }
    if (!have_x) {
      rel.kind = PrefixRelation::XPrefix;
      rel.cont_sign = b.runs()[j].sign;
      rel.cont_rest = rem_b;
      rel.cont_last = (j + 1 == b.runs().size());
      return rel;
    }
    if (!have_b) {
      rel.kind = PrefixRelation::BPrefix;
      rel.x_sign = x.runs()[i].sign;
      return rel;
    }
    int sx = x.runs()[i].sign, sb = b.runs()[j].sign;
    if (sx != sb) {
      rel.kind = PrefixRelation::Diverged;
      rel.x_sign = sx;
      return rel;
    }
    auto c = rem_x <=> rem_b;
    if (c == 0) {
      have_x = have_b = false;
      ++i, ++j;
    } else if (c < 0) {
      rem_b = cantor_left_sub(rem_x, rem_b);
      have_x = false;
      ++i;
    } else {
      rem_x = cantor_left_sub(rem_b, rem_x);
      have_b = false;
      ++j;
    }
  }
}

// Minimal run of plus signs appended to x so that x passes b upward:
// strictly (x' > b) in strict mode, or reaching it (x' >= b or b simpler
// than x') otherwise. nullopt when no extension can ever do it.
std::optional<Ordinal> plus_extension(const Surreal& x, const Surreal& b,
                                      bool strict) {
  PrefixRelation rel = relate(x, b);
  switch (rel.kind) {
    case PrefixRelation::Equal:
      return strict ? std::optional<Ordinal>(Ordinal(1))
                    : std::optional<Ordinal>(Ordinal(0));
    case PrefixRelation::XPrefix:
      if (rel.cont_sign < 0) return Ordinal(0);  // b already below x
      if (!rel.cont_last) return rel.cont_rest;  // b turns down afterwards
      return strict ? cantor_add(rel.cont_rest, Ordinal(1)) : rel.cont_rest;
    case PrefixRelation::BPrefix:
      if (rel.x_sign > 0) return Ordinal(0);  // x already above b
      // x dives below b at b's end; appending plus signs never undoes it.
      return strict ? std::nullopt : std::optional<Ordinal>(Ordinal(0));
    case PrefixRelation::Diverged:
      if (rel.x_sign > 0) return Ordinal(0);
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Ordinal> minus_extension(const Surreal& x, const Surreal& b,
                                       bool strict) {
  return plus_extension(negate(x), negate(b), strict);
}

std::optional<Ordinal> extension(const Surreal& x, const Surreal& b, int sign,
                                 bool strict) {
  return sign > 0 ? plus_extension(x, b, strict) : minus_extension(x, b, strict);
}

// x >= h, or h simpler than x. For a verified increasing chain with
// pointwise-union sup h this is exactly "x exceeds every chain element".
bool above_or_extends(const Surreal& x, const Surreal& h) {
  return geq(x, h) || is_simpler(h, x);
}
bool below_or_extends(const Surreal& x, const Surreal& h) {
  return leq(x, h) || is_simpler(h, x);
}

const Surreal& chain_sup_or_fail(const OmegaChain& c) {
  if (!c.sup)
    fail(ErrorKind::Undecidable,
         "chain bound needs a supremum for a transfinite comparison");
  return *c.sup;
}

}  // namespace

Ordinal Cut::default_cut_budget() {
  return cantor_mul(Ordinal::omega(), Ordinal::omega());
}

void append_families(std::vector<BoundFamily>& out, const OptionSide& side) {
  if (side.single) out.push_back(BoundFamily::of(*side.single));
  if (side.chain) out.push_back(BoundFamily::of(*side.chain));
}

bool bound_satisfied(const BoundFamily& b, const Surreal& x, bool lower_side) {
  if (b.single) return lower_side ? gt(x, *b.single) : lt(x, *b.single);
  const OmegaChain& c = *b.chain;
  if (lower_side) {
    if (!c.increasing) return gt(x, c.gen(0));  // below the top element
    return above_or_extends(x, chain_sup_or_fail(c));
  }
  if (c.increasing) return lt(x, c.gen(0));
  return below_or_extends(x, chain_sup_or_fail(c));
}

namespace {

// Extension required to satisfy a violated bound; the chain hard sides use
// the non-strict reach toward the supremum.
std::optional<Ordinal> required_extension(const BoundFamily& b,
                                          const Surreal& x, bool lower_side) {
  int dir = lower_side ? +1 : -1;
  if (b.single) return extension(x, *b.single, dir, /*strict=*/true);
  const OmegaChain& c = *b.chain;
  bool easy = lower_side ? !c.increasing : c.increasing;
  if (easy) return extension(x, c.gen(0), dir, /*strict=*/true);
  return extension(x, chain_sup_or_fail(c), dir, /*strict=*/false);
}

void verify_chains(const Cut& cut) {
  for (const auto& b : cut.lower)
    if (b.chain) b.chain->verify(kSpotChecks);
  for (const auto& b : cut.upper)
    if (b.chain) b.chain->verify(kSpotChecks);
}

void recheck_result(const Cut& cut, const Surreal& x) {
  for (const auto& b : cut.lower) {
    if (b.single && !gt(x, *b.single))
      fail(ErrorKind::EmptyCut, "result does not exceed a lower bound");
    if (b.chain)
      for (int i = 0; i < kSpotChecks; ++i)
        if (!gt(x, b.chain->gen(i)))
          fail(ErrorKind::NotAChain,
               "result fails a sampled lower chain element; unsound hint?");
  }
  for (const auto& b : cut.upper) {
    if (b.single && !lt(x, *b.single))
      fail(ErrorKind::EmptyCut, "result does not precede an upper bound");
    if (b.chain)
      for (int i = 0; i < kSpotChecks; ++i)
        if (!lt(x, b.chain->gen(i)))
          fail(ErrorKind::NotAChain,
               "result fails a sampled upper chain element; unsound hint?");
  }
}

}  // namespace

Surreal simplest_in_cut(const Cut& cut) {
  verify_chains(cut);
  Surreal x;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    if (x.length() > cut.budget)
      fail(ErrorKind::BudgetExceeded, "cut result exceeds the length budget");
    bool lower_violated = false, upper_violated = false;
    for (const auto& b : cut.lower)
      if (!bound_satisfied(b, x, true)) {
        lower_violated = true;
        break;
      }
    for (const auto& b : cut.upper)
      if (!bound_satisfied(b, x, false)) {
        upper_violated = true;
        break;
      }
    if (!lower_violated && !upper_violated) {
      recheck_result(cut, x);
      return x;
    }
    if (lower_violated && upper_violated)
      fail(ErrorKind::EmptyCut, "bounds overlap at prefix " + to_string(x));
    bool lower_side = lower_violated;
    const auto& bounds = lower_side ? cut.lower : cut.upper;
    Ordinal leap;
    for (const auto& b : bounds) {
      if (bound_satisfied(b, x, lower_side)) continue;
      auto need = required_extension(b, x, lower_side);
      if (!need)
        fail(ErrorKind::EmptyCut,
             "a bound can never be passed from prefix " + to_string(x));
      leap = ord_max(leap, *need);
    }
    if (leap.is_zero())
      fail(ErrorKind::EmptyCut, "violated bound needs no extension");
    x = concat(x, Surreal::from_runs({Run{lower_side ? 1 : -1, leap}}));
  }
  fail(ErrorKind::BudgetExceeded, "cut iteration limit reached");
}

namespace {

// Does some element of the family reach v or beyond (upward)?
bool family_reaches_up_to(const BoundFamily& f, const Surreal& v) {
  if (f.single) return geq(*f.single, v);
  const OmegaChain& c = *f.chain;
  if (!c.increasing) return geq(c.gen(0), v);
  const Surreal& h = chain_sup_or_fail(c);
  // Some gen(n) >= v  iff  v < h and h is not an initial segment of v.
  return lt(v, h) && !is_simpler(h, v);
}

bool family_reaches_down_to(const BoundFamily& f, const Surreal& v) {
  if (f.single) return leq(*f.single, v);
  const OmegaChain& c = *f.chain;
  if (c.increasing) return leq(c.gen(0), v);
  const Surreal& h = chain_sup_or_fail(c);
  return gt(v, h) && !is_simpler(h, v);
}

bool set_reaches_up_to(const std::vector<BoundFamily>& fs, const Surreal& v) {
  return std::any_of(fs.begin(), fs.end(), [&](const BoundFamily& f) {
    return family_reaches_up_to(f, v);
  });
}
bool set_reaches_down_to(const std::vector<BoundFamily>& fs,
                         const Surreal& v) {
  return std::any_of(fs.begin(), fs.end(), [&](const BoundFamily& f) {
    return family_reaches_down_to(f, v);
  });
}

// Every realized element of f has an upper bound in the set.
bool set_dominates_family_up(const std::vector<BoundFamily>& set,
                             const BoundFamily& f) {
  if (f.single) return set_reaches_up_to(set, *f.single);
  const OmegaChain& c = *f.chain;
  for (int i = 0; i < kSpotChecks; ++i)
    if (!set_reaches_up_to(set, c.gen(i))) return false;
  if (!c.increasing) return true;  // top element dominated covers the rest
  const Surreal& h = chain_sup_or_fail(c);
  // Beyond the samples the elements approach h from below: some member of
  // the set must keep up arbitrarily close to h.
  for (const auto& g : set) {
    if (g.single && (geq(*g.single, h) || is_simpler(h, *g.single)))
      return true;
    if (g.chain && g.chain->increasing) {
      const Surreal& hg = chain_sup_or_fail(*g.chain);
      if (is_simpler(h, hg) || (lt(h, hg) && !is_simpler(hg, h))) return true;
    }
  }
  return false;
}

bool set_dominates_family_down(const std::vector<BoundFamily>& set,
                               const BoundFamily& f) {
  if (f.single) return set_reaches_down_to(set, *f.single);
  const OmegaChain& c = *f.chain;
  for (int i = 0; i < kSpotChecks; ++i)
    if (!set_reaches_down_to(set, c.gen(i))) return false;
  if (c.increasing) return true;
  const Surreal& h = chain_sup_or_fail(c);
  for (const auto& g : set) {
    if (g.single && (leq(*g.single, h) || is_simpler(h, *g.single)))
      return true;
    if (g.chain && !g.chain->increasing) {
      const Surreal& hg = chain_sup_or_fail(*g.chain);
      if (is_simpler(h, hg) || (gt(h, hg) && !is_simpler(hg, h))) return true;
    }
  }
  return false;
}

}  // namespace

bool is_cofinal_wrt(const Cut& a, const Cut& b) {
  for (const auto& f : b.lower)
    if (!set_dominates_family_up(a.lower, f)) return false;
  for (const auto& f : b.upper)
    if (!set_dominates_family_down(a.upper, f)) return false;
  return true;
}

bool mutually_cofinal(const Cut& a, const Cut& b) {
  return is_cofinal_wrt(a, b) && is_cofinal_wrt(b, a);
}

// --- named chains -----------------------------------------------------------

OmegaChain chain_nats() {
  OmegaChain c;
  c.gen = [](int n) { return from_int(n); };
  c.increasing = true;
  c.sup = from_ordinal(Ordinal::omega());
  return c;
}

OmegaChain chain_neg_nats() {
  OmegaChain c;
  c.gen = [](int n) { return from_int(-(n + 1)); };
  c.increasing = false;
  c.sup = negate(from_ordinal(Ordinal::omega()));
  return c;
}

OmegaChain chain_omega_minus_nats() {
  OmegaChain c;
  c.gen = [](int n) {
    return concat(from_ordinal(Ordinal::omega()),
                  from_int(-(n + 1)));
  };
  c.increasing = false;
  c.sup = Surreal::from_runs(
      {Run{1, Ordinal::omega()}, Run{-1, Ordinal::omega()}});
  return c;
}

OmegaChain chain_half_powers() {
  OmegaChain c;
  c.gen = [](int n) { return from_dyadic(Dyadic::half_pow(n)); };
  c.increasing = false;
  c.sup = Surreal::from_runs({Run{1, Ordinal(1)}, Run{-1, Ordinal::omega()}});
  return c;
}

OmegaChain chain_neg_half_powers() {
  OmegaChain c;
  c.gen = [](int n) { return from_dyadic(-Dyadic::half_pow(n)); };
  c.increasing = true;
  c.sup = Surreal::from_runs({Run{-1, Ordinal(1)}, Run{1, Ordinal::omega()}});
  return c;
}

std::optional<OmegaChain> named_chain(const std::string& name) {
  if (name == "nats") return chain_nats();
  if (name == "neg_nats") return chain_neg_nats();
  if (name == "omega_minus_nats") return chain_omega_minus_nats();
  if (name == "half_powers") return chain_half_powers();
  if (name == "neg_half_powers") return chain_neg_half_powers();
  return std::nullopt;
}

}  // namespace surreal
