#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "surreal/dyadic.hpp"
#include "surreal/ordinal.hpp"

namespace surreal {

/// One maximal block of equal signs.
struct Run {
  int sign = 1;  // +1 or -1
  Ordinal length{1};

  bool operator==(const Run&) const = default;
};

/// A surreal number as a run-length-encoded sign sequence: a finite list of
/// alternating-sign runs with ordinal lengths >= 1. The empty list is 0.
/// Normalization (merging same-sign neighbours, dropping empty runs) makes
/// the representation unique, so structural equality is number equality.
class Surreal {
 public:
  Surreal() = default;  // zero
  static Surreal from_runs(std::vector<Run> runs);
  static Surreal from_signs(std::initializer_list<int> signs);

  bool is_zero() const { return runs_.empty(); }
  const std::vector<Run>& runs() const { return runs_; }

  Ordinal length() const;

  bool operator==(const Surreal& o) const { return runs_ == o.runs_; }

 private:
  std::vector<Run> runs_;
};

enum class Cmp { LT, EQ, GT };

/// Lexicographic value order with zero padding.
Cmp compare(const Surreal& x, const Surreal& y);
std::strong_ordering value_order(const Surreal& x, const Surreal& y);

inline bool lt(const Surreal& x, const Surreal& y) {
  return compare(x, y) == Cmp::LT;
}
inline bool gt(const Surreal& x, const Surreal& y) {
  return compare(x, y) == Cmp::GT;
}
inline bool leq(const Surreal& x, const Surreal& y) {
  return compare(x, y) != Cmp::GT;
}
inline bool geq(const Surreal& x, const Surreal& y) {
  return compare(x, y) != Cmp::LT;
}

/// Sign at position a, zero-padded past the length.
int sign_at(const Surreal& x, const Ordinal& a);

/// x is an initial truncation of y (allows x == y).
bool is_simpler(const Surreal& x, const Surreal& y);

/// Zero-padded truncation to length a.
Surreal restrict_to(const Surreal& x, const Ordinal& a);

/// The longest common initial truncation.
Surreal common_prefix(const Surreal& x, const Surreal& y);

/// Run-sign flip; equals Conway negation.
Surreal negate(const Surreal& x);

/// Appends signs of y after those of x (the concatenation sum; lives here
/// because normalization owns the boundary merge).
Surreal concat(const Surreal& x, const Surreal& y);

/// A strictly monotone w-indexed sequence of surreals that is also a chain
/// for the simplicity order, together with its simplicity supremum (the
/// pointwise union). All transfinite bound families in this kernel are of
/// this form; the supremum may be omitted when no transfinite leap will be
/// asked of the family.
struct OmegaChain {
  std::function<Surreal(int)> gen;
  bool increasing = true;  // value direction
  std::optional<Surreal> sup;

  /// Checks strict value monotonicity, the chain property and, when
  /// present, the supremum on the first k indices. Raises NotAChain on
  /// failure.
  void verify(int spot_checks = 8) const;
};

/// Supremum of a finite simplicity chain (the longest element).
Surreal sup_chain(const std::vector<Surreal>& chain);
/// Supremum of an w-indexed chain: verifies and returns the hint.
Surreal sup_chain(const std::function<Surreal(int)>& gen, const Surreal& hint,
                  int spot_checks = 8);

/// One side of the reduced canonical representation: the closest strict
/// prefix on that side when it exists, or the cofinal prefix chain when the
/// deciding run has limit length.
struct OptionSide {
  std::optional<Surreal> single;
  std::optional<OmegaChain> chain;

  bool empty() const { return !single && !chain; }
};

struct CanonicalOptions {
  OptionSide left, right;
};

/// Reduced canonical representation: on each side the longest strict prefix
/// lying on that side, which is a single prefix when the last run of that
/// sign has successor length and a cofinal w-chain of prefixes otherwise.
CanonicalOptions canonical_options(const Surreal& x);

/// All strict prefixes partitioned by side; requires finite length.
struct ExhaustiveOptions {
  std::vector<Surreal> left, right;
};
ExhaustiveOptions exhaustive_options(const Surreal& x);

// --- conversions ----------------------------------------------------------

Surreal from_dyadic(const Dyadic& d);
/// Requires finite length.
Dyadic to_dyadic(const Surreal& x);
bool is_finite_length(const Surreal& x);

Surreal from_ordinal(const Ordinal& a);
/// Requires an all-plus (or empty) sign sequence.
Ordinal to_ordinal(const Surreal& x);
bool is_ordinal(const Surreal& x);

Surreal from_int(std::int64_t n);

// --- text ------------------------------------------------------------------

/// Sign-string syntax: runs separated by spaces, `^len` omitted when the
/// run has length 1, composite ordinal lengths parenthesized: `+^w -^3 +`.
/// `0` denotes the empty sequence. Round-trips bit-exactly.
std::string to_string(const Surreal& x);
Surreal parse_signs(std::string_view text);

std::size_t hash_value(const Surreal& x);

}  // namespace surreal

template <>
struct std::hash<surreal::Surreal> {
  std::size_t operator()(const surreal::Surreal& x) const {
    return surreal::hash_value(x);
  }
};
