#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace surreal {

struct OrdinalTerm;

/// An ordinal below epsilon_0 in Cantor normal form: a finite sum of terms
/// w^e_i * c_i with strictly decreasing exponents e_i (each again an
/// Ordinal) and coefficients c_i >= 1. The empty sum is 0. The
/// representation is unique, so structural equality is ordinal equality.
class Ordinal {
 public:
  Ordinal();  // zero
  explicit Ordinal(std::uint64_t n);

  static Ordinal omega();
  /// Builds a sum of terms; normalizes (sorts and merges) if needed.
  static Ordinal from_terms(std::vector<OrdinalTerm> terms);

  bool is_zero() const;
  bool is_finite() const;
  std::uint64_t finite_value() const;  // requires is_finite()
  /// Nonzero with no finite part, i.e. the smallest term has exponent > 0.
  bool is_limit() const;
  bool is_successor() const;

  /// CNF nesting depth: 0 for finite ordinals, 1 + depth of the largest
  /// exponent otherwise.
  int depth() const;

  const std::vector<OrdinalTerm>& terms() const;

  std::strong_ordering operator<=>(const Ordinal& other) const;
  bool operator==(const Ordinal& other) const;

 private:
  std::vector<OrdinalTerm> terms_;
};

struct OrdinalTerm {
  Ordinal exponent;
  std::uint64_t coeff = 1;
};

/// Maximum allowed CNF nesting depth (exponent tower height). Results
/// deeper than this raise BudgetExceeded.
int ordinal_depth_limit();
void set_ordinal_depth_limit(int limit);

std::strong_ordering ord_compare(const Ordinal& a, const Ordinal& b);

/// Cantor (non-commutative) sum: dominated leading terms of a are absorbed.
Ordinal cantor_add(const Ordinal& a, const Ordinal& b);
/// Cantor (non-commutative) product.
Ordinal cantor_mul(const Ordinal& a, const Ordinal& b);
/// w^b as a single CNF term. Checks the nesting-depth budget.
Ordinal cantor_omega_pow(const Ordinal& b);
/// a^w, the supremum of the finite Cantor powers of a (requires a >= 1).
Ordinal cantor_pow_omega(const Ordinal& a);

/// Hessenberg (natural, commutative) sum: termwise coefficient merge.
Ordinal hessenberg_add(const Ordinal& a, const Ordinal& b);
/// Hessenberg (natural) product: full distribution with natural sums of
/// exponents.
Ordinal hessenberg_mul(const Ordinal& a, const Ordinal& b);

/// The unique g with a + g = b (Cantor sum), for a <= b.
Ordinal cantor_left_sub(const Ordinal& a, const Ordinal& b);

/// Predecessor of a successor ordinal (requires is_successor()).
Ordinal predecessor(const Ordinal& a);

/// n-th element of the canonical fundamental sequence of a limit ordinal:
/// fundamental(w, n) = n, fundamental(w^2, n) = w*n, ...
Ordinal fundamental(const Ordinal& limit, std::uint64_t n);

bool is_limit(const Ordinal& a);

Ordinal ord_max(const Ordinal& a, const Ordinal& b);
Ordinal ord_min(const Ordinal& a, const Ordinal& b);

/// Least upper bound of a finite nonempty set.
Ordinal ord_sup(const std::vector<Ordinal>& xs);

/// Least upper bound of a strictly increasing w-chain given by a generator,
/// with a caller-supplied closed-form hint. Verifies on the first k indices
/// that the hint bounds the samples, and that no smaller ordinal of the
/// same leading shape (last coefficient decremented) already does.
Ordinal ord_sup(const std::function<Ordinal(int)>& gen, const Ordinal& hint,
                int spot_checks = 8);

/// Text syntax: `0`, `5`, `w`, `w^2*3+w+1`, `w^(w+1)`. Round-trips
/// bit-exactly with to_string.
Ordinal parse_ordinal(std::string_view text);
std::string to_string(const Ordinal& a);

std::size_t hash_value(const Ordinal& a);

}  // namespace surreal

template <>
struct std::hash<surreal::Ordinal> {
  std::size_t operator()(const surreal::Ordinal& a) const {
    return surreal::hash_value(a);
  }
};
