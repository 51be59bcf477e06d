#include "surreal/field.hpp"

#include "surreal/errors.hpp"

namespace surreal {

const Surreal* FieldCache::find(const Key& k) const {
  auto it = map_.find(k);
  return it == map_.end() ? nullptr : &it->second;
}

void FieldCache::store(Key k, Surreal v) {
  if (max_entries_ == 0) return;  // memoization disabled
  if (map_.size() >= max_entries_) map_.clear();
  map_.emplace(std::move(k), std::move(v));
}

namespace {

void require_finite(const Surreal& x, const Surreal& y) {
  if (!is_finite_length(x) || !is_finite_length(y))
    fail(ErrorKind::NotFiniteLength,
         "field operations are defined on finite lengths only");
}

struct Options {
  std::optional<Surreal> left, right;
};

// Reduced canonical options; mutually cofinal with the full option sets.
Options reduced(const Surreal& x) {
  CanonicalOptions o = canonical_options(x);
  return Options{o.left.single, o.right.single};
}

Surreal add_rec(const Surreal& x, const Surreal& y, FieldCache* cache);
Surreal mul_rec(const Surreal& x, const Surreal& y, FieldCache* cache);

Surreal add_rec(const Surreal& x, const Surreal& y, FieldCache* cache) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  FieldCache::Key key{x, y, 0};
  if (cache)
    if (const Surreal* hit = cache->find(key)) return *hit;
  Options ox = reduced(x), oy = reduced(y);
  Cut cut;
  if (ox.left) cut.add_lower(add_rec(*ox.left, y, cache));
  if (oy.left) cut.add_lower(add_rec(x, *oy.left, cache));
  if (ox.right) cut.add_upper(add_rec(*ox.right, y, cache));
  if (oy.right) cut.add_upper(add_rec(x, *oy.right, cache));
  Surreal out = simplest_in_cut(cut);
  if (cache) cache->store(std::move(key), out);
  return out;
}

Surreal mul_rec(const Surreal& x, const Surreal& y, FieldCache* cache) {
  if (x.is_zero() || y.is_zero()) return Surreal();
  FieldCache::Key key{x, y, 1};
  if (cache)
    if (const Surreal* hit = cache->find(key)) return *hit;
  Options ox = reduced(x), oy = reduced(y);
  auto part = [&](const Surreal& a, const Surreal& b) {
    // a*y + x*b - a*b
    Surreal s = add_rec(mul_rec(a, y, cache), mul_rec(x, b, cache), cache);
    return add_rec(s, negate(mul_rec(a, b, cache)), cache);
  };
  Cut cut;
  if (ox.left && oy.left) cut.add_lower(part(*ox.left, *oy.left));
  if (ox.right && oy.right) cut.add_lower(part(*ox.right, *oy.right));
  if (ox.left && oy.right) cut.add_upper(part(*ox.left, *oy.right));
  if (ox.right && oy.left) cut.add_upper(part(*ox.right, *oy.left));
  Surreal out = simplest_in_cut(cut);
  if (cache) cache->store(std::move(key), out);
  return out;
}

}  // namespace

Surreal add(const Surreal& x, const Surreal& y, FieldCache* cache) {
  require_finite(x, y);
  FieldCache local;
  return add_rec(x, y, cache ? cache : &local);
}

Surreal sub(const Surreal& x, const Surreal& y, FieldCache* cache) {
  return add(x, negate(y), cache);
}

Surreal mul(const Surreal& x, const Surreal& y, FieldCache* cache) {
  require_finite(x, y);
  FieldCache local;
  return mul_rec(x, y, cache ? cache : &local);
}

Surreal add_uniform(const Surreal& x, const Cut& rep_x, const Surreal& y,
                    const Cut& rep_y, FieldCache* cache) {
  require_finite(x, y);
  FieldCache local;
  FieldCache* c = cache ? cache : &local;
  auto realized = [](const std::vector<BoundFamily>& fs) {
    std::vector<Surreal> out;
    for (const auto& f : fs) {
      if (f.single) out.push_back(*f.single);
      if (f.chain)
        fail(ErrorKind::Unsupported,
             "uniform sum needs finite realized bounds");
    }
    return out;
  };
  Cut cut;
  for (const auto& l : realized(rep_x.lower)) cut.add_lower(add(l, y, c));
  for (const auto& l : realized(rep_y.lower)) cut.add_lower(add(x, l, c));
  for (const auto& r : realized(rep_y.upper)) cut.add_upper(add(x, r, c));
  for (const auto& r : realized(rep_x.upper)) cut.add_upper(add(r, y, c));
  return simplest_in_cut(cut);
}

}  // namespace surreal
