#include "surreal/dyadic.hpp"

#include <cstdlib>

#include "surreal/errors.hpp"

namespace surreal {

Dyadic::Dyadic(std::int64_t num, int exp) : num_(num), exp_(exp) {
  if (exp_ < 0) fail(ErrorKind::ParseError, "negative dyadic exponent");
  while (exp_ > 0 && num_ % 2 == 0) {
    num_ /= 2;
    --exp_;
  }
  if (num_ == 0) exp_ = 0;
}

Dyadic Dyadic::half_pow(int k) { return Dyadic(1, k); }

Dyadic Dyadic::operator+(const Dyadic& o) const {
  int e = exp_ > o.exp_ ? exp_ : o.exp_;
  std::int64_t a = num_ << (e - exp_);
  std::int64_t b = o.num_ << (e - o.exp_);
  return Dyadic(a + b, e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::operator*(const Dyadic& o) const {
  return Dyadic(num_ * o.num_, exp_ + o.exp_);
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& o) const {
  int e = exp_ > o.exp_ ? exp_ : o.exp_;
  std::int64_t a = num_ << (e - exp_);
  std::int64_t b = o.num_ << (e - o.exp_);
  return a <=> b;
}

std::string to_string(const Dyadic& d) {
  if (d.is_integer()) return std::to_string(d.num());
  return std::to_string(d.num()) + "/" +
         std::to_string(std::int64_t(1) << d.exp());
}

Dyadic parse_dyadic(std::string_view text) {
  std::string s(text);
  std::size_t slash = s.find('/');
  char* end = nullptr;
  std::int64_t num = std::strtoll(s.c_str(), &end, 10);
  if (end == s.c_str()) fail(ErrorKind::ParseError, "expected a number");
  if (slash == std::string::npos) {
    if (static_cast<std::size_t>(end - s.c_str()) != s.size())
      fail(ErrorKind::ParseError, "trailing input in number");
    return Dyadic(num);
  }
  if (static_cast<std::size_t>(end - s.c_str()) != slash)
    fail(ErrorKind::ParseError, "malformed fraction");
  char* end2 = nullptr;
  std::int64_t den = std::strtoll(s.c_str() + slash + 1, &end2, 10);
  if (end2 == s.c_str() + slash + 1 ||
      static_cast<std::size_t>(end2 - s.c_str()) != s.size())
    fail(ErrorKind::ParseError, "malformed fraction denominator");
  if (den <= 0 || (den & (den - 1)) != 0)
    fail(ErrorKind::NotDyadic, "denominator must be a power of two");
  int e = 0;
  while ((std::int64_t(1) << e) != den) ++e;
  return Dyadic(num, e);
}

}  // namespace surreal
