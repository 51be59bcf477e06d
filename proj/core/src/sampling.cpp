#include "surreal/sampling.hpp"

namespace surreal {

std::vector<Surreal> enumerate_up_to_length(int n) {
  std::vector<Surreal> out;
  out.push_back(Surreal());
  std::size_t level_begin = 0;
  for (int len = 1; len <= n; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      out.push_back(concat(out[i], from_int(1)));
      out.push_back(concat(out[i], from_int(-1)));
    }
    level_begin = level_end;
  }
  return out;
}

int Sampler::uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Ordinal Sampler::ordinal(int max_depth) {
  if (max_depth <= 0) return Ordinal(std::uint64_t(uniform(0, 4)));
  int nterms = uniform(0, 2);
  std::vector<OrdinalTerm> terms;
  for (int i = 0; i < nterms; ++i)
    terms.push_back(
        OrdinalTerm{positive_ordinal(max_depth - 1),
                    std::uint64_t(uniform(1, 3))});
  if (uniform(0, 1))
    terms.push_back(OrdinalTerm{Ordinal(), std::uint64_t(uniform(1, 4))});
  return Ordinal::from_terms(std::move(terms));
}

Ordinal Sampler::positive_ordinal(int max_depth) {
  for (;;) {
    Ordinal a = ordinal(max_depth);
    if (!a.is_zero()) return a;
  }
}

Surreal Sampler::surreal(int max_runs, bool allow_transfinite) {
  int nruns = uniform(0, max_runs);
  std::vector<Run> runs;
  int sign = uniform(0, 1) ? 1 : -1;
  for (int i = 0; i < nruns; ++i) {
    Ordinal len;
    if (allow_transfinite && uniform(0, 2) == 0) {
      len = positive_ordinal(1);
      if (len.is_finite()) len = cantor_mul(Ordinal::omega(), len);
    } else {
      len = Ordinal(std::uint64_t(uniform(1, 3)));
    }
    runs.push_back(Run{sign, len});
    sign = -sign;
  }
  return Surreal::from_runs(std::move(runs));
}

Surreal Sampler::dyadic_surreal(int max_len) {
  int len = uniform(0, max_len);
  std::vector<Run> runs;
  for (int i = 0; i < len; ++i)
    runs.push_back(Run{uniform(0, 1) ? 1 : -1, Ordinal(1)});
  return Surreal::from_runs(std::move(runs));
}

Surreal Sampler::single_run_surreal() {
  Ordinal len = positive_ordinal(1);
  return Surreal::from_runs({Run{uniform(0, 1) ? 1 : -1, len}});
}

}  // namespace surreal
