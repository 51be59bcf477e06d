#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace surreal {

/// Exact dyadic rational num / 2^exp, kept reduced (num odd or exp == 0).
/// This is the oracle arithmetic for the finite-length fragment.
class Dyadic {
 public:
  Dyadic() = default;  // zero
  Dyadic(std::int64_t num, int exp = 0);

  static Dyadic half_pow(int k);  // 2^-k

  std::int64_t num() const { return num_; }
  int exp() const { return exp_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ == 0; }
  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

  Dyadic operator-() const { return Dyadic(-num_, exp_); }
  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-(const Dyadic& o) const;
  Dyadic operator*(const Dyadic& o) const;

  std::strong_ordering operator<=>(const Dyadic& o) const;
  bool operator==(const Dyadic& o) const = default;

 private:
  std::int64_t num_ = 0;
  int exp_ = 0;
};

/// Renders integers bare, fractions as num/den: `3/8`, `-2`.
std::string to_string(const Dyadic& d);
/// Accepts `3`, `-3`, `3/8`; the denominator must be a power of two.
Dyadic parse_dyadic(std::string_view text);

}  // namespace surreal
