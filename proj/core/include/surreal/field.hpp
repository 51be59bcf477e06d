#pragma once

#include <cstddef>
#include <unordered_map>
#include <utility>

#include "surreal/bracket.hpp"
#include "surreal/surreal.hpp"

namespace surreal {

/// Memo table for the recursive field operations. One cache per computation
/// keeps the operations pure from the outside; callers may share a cache
/// across calls for speed, or pass nullptr to disable memoization.
class FieldCache {
 public:
  explicit FieldCache(std::size_t max_entries = std::size_t(1) << 20)
      : max_entries_(max_entries) {}

  struct Key {
    Surreal a, b;
    int op;  // 0 add, 1 mul
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = hash_value(k.a);
      h ^= hash_value(k.b) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      return h ^ static_cast<std::size_t>(k.op);
    }
  };

  const Surreal* find(const Key& k) const;
  void store(Key k, Surreal v);

 private:
  std::size_t max_entries_;
  std::unordered_map<Key, Surreal, KeyHash> map_;
};

/// Conway negation; the run-sign flip, total at every length. The cut
/// recursion {-x_R | -x_L} is kept in the tests as an oracle.
inline Surreal neg(const Surreal& x) { return negate(x); }

/// Conway sum via the recursive cut equation on reduced canonical options,
/// for finite-length operands.
Surreal add(const Surreal& x, const Surreal& y, FieldCache* cache = nullptr);
Surreal sub(const Surreal& x, const Surreal& y, FieldCache* cache = nullptr);

/// Conway product via the recursive cut equation, finite lengths.
Surreal mul(const Surreal& x, const Surreal& y, FieldCache* cache = nullptr);

/// The sum evaluated over arbitrary cut representations of the operands
/// (finite realized bounds); the result is representation-independent.
Surreal add_uniform(const Surreal& x, const Cut& rep_x, const Surreal& y,
                    const Cut& rep_y, FieldCache* cache = nullptr);

}  // namespace surreal
