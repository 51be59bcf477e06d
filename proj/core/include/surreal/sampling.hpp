#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "surreal/surreal.hpp"

namespace surreal {

/// All surreals of finite length <= n (2^(n+1)-1 of them), shortest first.
std::vector<Surreal> enumerate_up_to_length(int n);

/// Deterministic sampling used by the law suites and tests.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  int uniform(int lo, int hi);  // inclusive

  /// Random CNF ordinal of bounded depth and size.
  Ordinal ordinal(int max_depth = 2);
  /// Random nonzero ordinal.
  Ordinal positive_ordinal(int max_depth = 2);

  /// Random surreal with up to max_runs runs; run lengths mix small finite
  /// values and small infinite ordinals.
  Surreal surreal(int max_runs = 4, bool allow_transfinite = true);
  /// Random finite-length surreal (a dyadic).
  Surreal dyadic_surreal(int max_len = 8);
  /// Random surreal usable as the left factor of a concatenation product
  /// with a transfinite right factor (single-run).
  Surreal single_run_surreal();

 private:
  std::mt19937_64 rng_;
};

}  // namespace surreal
