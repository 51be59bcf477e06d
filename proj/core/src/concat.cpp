#include "surreal/concat.hpp"

#include "surreal/errors.hpp"

namespace surreal {

Surreal concat_mul(const Surreal& x, const Surreal& y) {
  if (x.is_zero() || y.is_zero()) return Surreal();
  std::vector<Run> out;
  if (x.runs().size() == 1) {
    // Single-run block: each run of y blows up into one run of the result.
    const Run& rx = x.runs()[0];
    for (const auto& ry : y.runs())
      out.push_back(Run{rx.sign * ry.sign, cantor_mul(rx.length, ry.length)});
    return Surreal::from_runs(std::move(out));
  }
  // Multi-run block: repeat the pattern once per sign of y. Only finite
  // repetition fits in a finite run list.
  Surreal neg_x = negate(x);
  for (const auto& ry : y.runs()) {
    if (!ry.length.is_finite())
      fail(ErrorKind::Unrepresentable,
           "transfinite repetition of a multi-run block has no finite "
           "run-list form");
    const Surreal& block = ry.sign > 0 ? x : neg_x;
    for (std::uint64_t i = 0; i < ry.length.finite_value(); ++i)
      out.insert(out.end(), block.runs().begin(), block.runs().end());
  }
  return Surreal::from_runs(std::move(out));
}

Surreal concat_add_cut_eq(const Surreal& x, const Surreal& y) {
  if (!is_finite_length(x) || !is_finite_length(y))
    fail(ErrorKind::NotFiniteLength, "cut form needs finite lengths");
  ExhaustiveOptions ox = exhaustive_options(x);
  ExhaustiveOptions oy = exhaustive_options(y);
  Cut cut;
  for (const auto& l : ox.left) cut.add_lower(l);
  for (const auto& l : oy.left) cut.add_lower(concat_add(x, l));
  for (const auto& r : oy.right) cut.add_upper(concat_add(x, r));
  for (const auto& r : ox.right) cut.add_upper(r);
  return simplest_in_cut(cut);
}

Surreal concat_mul_cut_eq(const Surreal& x, const Surreal& y) {
  if (!is_finite_length(x) || !is_finite_length(y))
    fail(ErrorKind::NotFiniteLength, "cut form needs finite lengths");
  if (compare(x, Surreal()) != Cmp::GT)
    fail(ErrorKind::NotPositive, "cut form of the product needs x > 0");
  ExhaustiveOptions ox = exhaustive_options(x);
  ExhaustiveOptions oy = exhaustive_options(y);
  Cut cut;
  for (const auto& yl : oy.left)
    for (const auto& xl : ox.left)
      cut.add_lower(concat_add(concat_mul(x, yl), xl));
  for (const auto& yr : oy.right)
    for (const auto& xr : ox.right)
      cut.add_lower(concat_add(concat_mul(x, yr), negate(xr)));
  for (const auto& yl : oy.left)
    for (const auto& xr : ox.right)
      cut.add_upper(concat_add(concat_mul(x, yl), xr));
  for (const auto& yr : oy.right)
    for (const auto& xl : ox.left)
      cut.add_upper(concat_add(concat_mul(x, yr), negate(xl)));
  return simplest_in_cut(cut);
}

}  // namespace surreal
