#pragma once

#include "surreal/bracket.hpp"
#include "surreal/surreal.hpp"

namespace surreal {

/// Concatenation sum: the signs of y appended after those of x.
/// Total; length adds by the Cantor sum.
inline Surreal concat_add(const Surreal& x, const Surreal& y) {
  return concat(x, y);
}

/// Concatenation product: one block of x or -x per sign of y; length
/// multiplies by the Cantor product. A block pattern with at least two runs
/// cannot be repeated transfinitely within a finite run list, so such
/// products raise Unrepresentable.
Surreal concat_mul(const Surreal& x, const Surreal& y);

/// Cross-check form of the sum through its cut expression
/// {x_L, x+y_L | x+y_R, x_R}, evaluated with exhaustive options through the
/// bracket engine. Requires finite lengths. Must agree with concat_add.
Surreal concat_add_cut_eq(const Surreal& x, const Surreal& y);

/// Cross-check form of the product through its cut expression
/// {x*y_L + x_L, x*y_R + (-x_R) | x*y_L + x_R, x*y_R + (-x_L)},
/// for x > 0 of finite length. Must agree with concat_mul.
Surreal concat_mul_cut_eq(const Surreal& x, const Surreal& y);

}  // namespace surreal
