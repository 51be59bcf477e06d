#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surreal/surreal.hpp"

namespace surreal {

/// One side constraint of a cut: either a single realized surreal or a
/// monotone w-indexed chain (which must also be a simplicity chain; its
/// sup field is the pointwise-union supremum, required whenever the family
/// can force a transfinite leap).
struct BoundFamily {
  std::optional<Surreal> single;
  std::optional<OmegaChain> chain;

  static BoundFamily of(Surreal v) {
    BoundFamily b;
    b.single = std::move(v);
    return b;
  }
  static BoundFamily of(OmegaChain c) {
    BoundFamily b;
    b.chain = std::move(c);
    return b;
  }
};

/// Appends the families encoding one canonical option side.
void append_families(std::vector<BoundFamily>& out, const OptionSide& side);

struct Cut {
  std::vector<BoundFamily> lower, upper;
  Ordinal budget = default_cut_budget();

  static Ordinal default_cut_budget();  // w*w

  Cut& add_lower(Surreal v) {
    lower.push_back(BoundFamily::of(std::move(v)));
    return *this;
  }
  Cut& add_upper(Surreal v) {
    upper.push_back(BoundFamily::of(std::move(v)));
    return *this;
  }
};

/// The simplest surreal strictly between the realized lower and upper
/// bounds: greedy prefix descent, one alternating run per iteration, with
/// exact run-length leaps computed from run-list comparison (transfinite
/// leaps reach the chain suprema). Errors: EmptyCut, BudgetExceeded.
Surreal simplest_in_cut(const Cut& cut);

/// True when every realized element of the family is on the correct side
/// of x (strictly below for lower bounds, strictly above for upper).
bool bound_satisfied(const BoundFamily& b, const Surreal& x, bool lower_side);

/// Cofinality of cut representations: a is cofinal with respect to b when
/// no element of b.lower strictly exceeds all of a.lower and no element of
/// b.upper lies strictly below all of a.upper. Exact for singles and for
/// chains carrying suprema; Undecidable otherwise.
bool is_cofinal_wrt(const Cut& a, const Cut& b);
bool mutually_cofinal(const Cut& a, const Cut& b);

// Named chain families used by the CLI cut syntax and tests.
OmegaChain chain_nats();              // 0, 1, 2, ...       sup w
OmegaChain chain_neg_nats();          // -1, -2, ...        sup -w
OmegaChain chain_omega_minus_nats();  // w-1, w-2, ...      sup +^w -^w
OmegaChain chain_half_powers();       // 1, 1/2, 1/4, ...   sup +-^w
OmegaChain chain_neg_half_powers();   // -1, -1/2, ...      sup -+^w
std::optional<OmegaChain> named_chain(const std::string& name);

}  // namespace surreal
