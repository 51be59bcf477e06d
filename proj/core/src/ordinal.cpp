#include "surreal/ordinal.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>

#include "surreal/errors.hpp"

namespace surreal {

namespace {

std::atomic<int> g_depth_limit{8};

void check_depth(const Ordinal& a) {
  if (a.depth() > ordinal_depth_limit())
    fail(ErrorKind::BudgetExceeded,
         "ordinal nesting depth " + std::to_string(a.depth()) +
             " exceeds limit " + std::to_string(ordinal_depth_limit()));
}

}  // namespace

int ordinal_depth_limit() { return g_depth_limit.load(); }
void set_ordinal_depth_limit(int limit) { g_depth_limit.store(limit); }

Ordinal::Ordinal() = default;

Ordinal::Ordinal(std::uint64_t n) {
  if (n > 0) terms_.push_back(OrdinalTerm{Ordinal(), n});
}

Ordinal Ordinal::omega() {
  Ordinal w;
  w.terms_.push_back(OrdinalTerm{Ordinal(1), 1});
  return w;
}

Ordinal Ordinal::from_terms(std::vector<OrdinalTerm> terms) {
  std::erase_if(terms, [](const OrdinalTerm& t) { return t.coeff == 0; });
  std::stable_sort(terms.begin(), terms.end(),
                   [](const OrdinalTerm& a, const OrdinalTerm& b) {
                     return a.exponent > b.exponent;
                   });
  Ordinal out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().exponent == t.exponent)
      out.terms_.back().coeff += t.coeff;
    else
      out.terms_.push_back(std::move(t));
  }
  return out;
}

bool Ordinal::is_zero() const { return terms_.empty(); }

bool Ordinal::is_finite() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

std::uint64_t Ordinal::finite_value() const {
  if (!is_finite()) fail(ErrorKind::NotOrdinal, "ordinal is not finite");
  return terms_.empty() ? 0 : terms_[0].coeff;
}

bool Ordinal::is_limit() const {
  return !terms_.empty() && !terms_.back().exponent.is_zero();
}

bool Ordinal::is_successor() const { return !is_zero() && !is_limit(); }

int Ordinal::depth() const {
  int d = 0;
  for (const auto& t : terms_)
    if (!t.exponent.is_zero()) d = std::max(d, 1 + t.exponent.depth());
  return d;
}

const std::vector<OrdinalTerm>& Ordinal::terms() const { return terms_; }

std::strong_ordering Ordinal::operator<=>(const Ordinal& other) const {
  std::size_t n = std::min(terms_.size(), other.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = terms_[i].exponent <=> other.terms_[i].exponent;
    if (c != 0) return c;
    if (terms_[i].coeff != other.terms_[i].coeff)
      return terms_[i].coeff <=> other.terms_[i].coeff;
  }
  return terms_.size() <=> other.terms_.size();
}

bool Ordinal::operator==(const Ordinal& other) const {
  return (*this <=> other) == 0;
}

std::strong_ordering ord_compare(const Ordinal& a, const Ordinal& b) {
  return a <=> b;
}

bool is_limit(const Ordinal& a) { return a.is_limit(); }

Ordinal cantor_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& f = b.terms()[0].exponent;
  std::vector<OrdinalTerm> out;
  for (const auto& t : a.terms()) {
    if (t.exponent > f)
      out.push_back(t);
    else
      break;
  }
  std::size_t i = 0;
  if (!a.terms().empty() && out.size() < a.terms().size() &&
      a.terms()[out.size()].exponent == f) {
    out.push_back(
        OrdinalTerm{f, a.terms()[out.size()].coeff + b.terms()[0].coeff});
    i = 1;
  }
  for (; i < b.terms().size(); ++i) out.push_back(b.terms()[i]);
  return Ordinal::from_terms(std::move(out));
}

Ordinal cantor_mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  Ordinal acc;
  const OrdinalTerm& lead = a.terms()[0];
  for (const auto& t : b.terms()) {
    Ordinal partial;
    if (t.exponent.is_zero()) {
      // a * n = w^e1*(c1*n) + tail(a) for finite n >= 1.
      std::vector<OrdinalTerm> ts;
      ts.push_back(OrdinalTerm{lead.exponent, lead.coeff * t.coeff});
      for (std::size_t i = 1; i < a.terms().size(); ++i)
        ts.push_back(a.terms()[i]);
      partial = Ordinal::from_terms(std::move(ts));
    } else {
      partial = Ordinal::from_terms(
          {OrdinalTerm{cantor_add(lead.exponent, t.exponent), t.coeff}});
    }
    acc = cantor_add(acc, partial);
  }
  return acc;
}

Ordinal cantor_omega_pow(const Ordinal& b) {
  Ordinal out = Ordinal::from_terms({OrdinalTerm{b, 1}});
  check_depth(out);
  return out;
}

Ordinal cantor_pow_omega(const Ordinal& a) {
  if (a.is_zero()) fail(ErrorKind::NotPositive, "0^w is not defined here");
  if (a == Ordinal(1)) return Ordinal(1);
  if (a.is_finite()) return Ordinal::omega();
  // (w^e*c + ...)^w = w^(e*w)
  return cantor_omega_pow(cantor_mul(a.terms()[0].exponent, Ordinal::omega()));
}

Ordinal hessenberg_add(const Ordinal& a, const Ordinal& b) {
  std::vector<OrdinalTerm> ts = a.terms();
  ts.insert(ts.end(), b.terms().begin(), b.terms().end());
  return Ordinal::from_terms(std::move(ts));
}

Ordinal hessenberg_mul(const Ordinal& a, const Ordinal& b) {
  Ordinal acc;
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms())
      acc = hessenberg_add(
          acc, Ordinal::from_terms({OrdinalTerm{
                   hessenberg_add(ta.exponent, tb.exponent),
                   ta.coeff * tb.coeff}}));
  return acc;
}

Ordinal cantor_left_sub(const Ordinal& a, const Ordinal& b) {
  if (a > b)
    fail(ErrorKind::NotOrdinal, "left subtraction requires a <= b");
  std::size_t i = 0;
  while (i < a.terms().size() && i < b.terms().size() &&
         a.terms()[i].exponent == b.terms()[i].exponent &&
         a.terms()[i].coeff == b.terms()[i].coeff)
    ++i;
  std::vector<OrdinalTerm> out;
  if (i == a.terms().size()) {
    out.assign(b.terms().begin() + i, b.terms().end());
  } else {
    // First differing term: either b jumps to a larger exponent tail, or
    // the shared exponent carries a larger coefficient in b.
    const OrdinalTerm& ta = a.terms()[i];
    const OrdinalTerm& tb = b.terms()[i];
    if (tb.exponent == ta.exponent) {
      out.push_back(OrdinalTerm{tb.exponent, tb.coeff - ta.coeff});
      out.insert(out.end(), b.terms().begin() + i + 1, b.terms().end());
    } else {
      // tb.exponent > ta.exponent: the whole tail of a is absorbed.
      out.assign(b.terms().begin() + i, b.terms().end());
    }
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal predecessor(const Ordinal& a) {
  if (!a.is_successor())
    fail(ErrorKind::NotOrdinal, "predecessor of a non-successor ordinal");
  std::vector<OrdinalTerm> ts = a.terms();
  if (--ts.back().coeff == 0) ts.pop_back();
  return Ordinal::from_terms(std::move(ts));
}

Ordinal fundamental(const Ordinal& limit, std::uint64_t n) {
  if (!limit.is_limit())
    fail(ErrorKind::NotOrdinal, "fundamental sequence of a non-limit");
  std::vector<OrdinalTerm> prefix = limit.terms();
  OrdinalTerm last = prefix.back();
  prefix.pop_back();
  if (last.coeff > 1) {
    prefix.push_back(OrdinalTerm{last.exponent, last.coeff - 1});
    last.coeff = 1;
  }
  // Now resolve w^e for the final single term.
  Ordinal step;
  if (last.exponent.is_successor()) {
    if (n > 0)
      step = Ordinal::from_terms(
          {OrdinalTerm{predecessor(last.exponent), n}});
  } else {
    step = cantor_omega_pow(fundamental(last.exponent, n));
  }
  Ordinal head = Ordinal::from_terms(std::move(prefix));
  return cantor_add(head, step);
}

Ordinal ord_max(const Ordinal& a, const Ordinal& b) { return a < b ? b : a; }
Ordinal ord_min(const Ordinal& a, const Ordinal& b) { return b < a ? b : a; }

Ordinal ord_sup(const std::vector<Ordinal>& xs) {
  if (xs.empty()) fail(ErrorKind::NotAChain, "sup of an empty set");
  Ordinal best = xs[0];
  for (const auto& x : xs) best = ord_max(best, x);
  return best;
}

Ordinal ord_sup(const std::function<Ordinal(int)>& gen, const Ordinal& hint,
                int spot_checks) {
  if (!hint.is_limit())
    fail(ErrorKind::NotAChain, "sup hint must be a limit ordinal");
  Ordinal prev;
  // Smaller candidate of the same leading shape: last coefficient bumped
  // down. If it still bounds every sample, the hint is not least.
  std::vector<OrdinalTerm> ts = hint.terms();
  if (--ts.back().coeff == 0) ts.pop_back();
  Ordinal smaller = Ordinal::from_terms(std::move(ts));
  bool smaller_bounds = true;
  for (int i = 0; i < spot_checks; ++i) {
    Ordinal x = gen(i);
    if (i > 0 && x <= prev)
      fail(ErrorKind::NotAChain, "generator is not strictly increasing");
    if (x >= hint)
      fail(ErrorKind::NotAChain, "hint is not an upper bound");
    if (x > smaller) smaller_bounds = false;
    prev = x;
  }
  if (smaller_bounds && !smaller.is_zero())
    fail(ErrorKind::NotAChain, "sup hint is not least for its shape");
  return hint;
}

// --- textual syntax ------------------------------------------------------

namespace {

struct OrdParser {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  std::uint64_t parse_uint() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail(ErrorKind::ParseError, "expected a number in ordinal literal");
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      v = v * 10 + static_cast<std::uint64_t>(s[pos++] - '0');
    return v;
  }

  Ordinal parse_sum() {
    Ordinal acc = parse_term();
    while (eat('+')) acc = cantor_add(acc, parse_term());
    return acc;
  }

  Ordinal parse_term() {
    skip_ws();
    if (peek() == 'w') {
      ++pos;
      Ordinal exp(1);
      if (eat('^')) {
        if (eat('(')) {
          exp = parse_sum();
          if (!eat(')')) fail(ErrorKind::ParseError, "missing ')'");
        } else if (peek() == 'w') {
          ++pos;
          exp = Ordinal::omega();
        } else {
          exp = Ordinal(parse_uint());
        }
      }
      std::uint64_t coeff = 1;
      if (eat('*')) coeff = parse_uint();
      if (coeff == 0) return Ordinal();
      return Ordinal::from_terms({OrdinalTerm{exp, coeff}});
    }
    return Ordinal(parse_uint());
  }
};

void print_ordinal(const Ordinal& a, std::string& out) {
  if (a.is_zero()) {
    out += '0';
    return;
  }
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out += '+';
    first = false;
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coeff);
      continue;
    }
    out += 'w';
    if (!(t.exponent == Ordinal(1))) {
      out += '^';
      if (t.exponent.is_finite()) {
        out += std::to_string(t.exponent.finite_value());
      } else if (t.exponent == Ordinal::omega()) {
        out += 'w';
      } else {
        out += '(';
        print_ordinal(t.exponent, out);
        out += ')';
      }
    }
    if (t.coeff != 1) {
      out += '*';
      out += std::to_string(t.coeff);
    }
  }
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) {
  OrdParser p{text};
  Ordinal a = p.parse_sum();
  p.skip_ws();
  if (p.pos != text.size())
    fail(ErrorKind::ParseError, "trailing input in ordinal literal");
  check_depth(a);
  return a;
}

std::string to_string(const Ordinal& a) {
  std::string out;
  print_ordinal(a, out);
  return out;
}

std::size_t hash_value(const Ordinal& a) {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& t : a.terms()) {
    h ^= hash_value(t.exponent) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= std::hash<std::uint64_t>{}(t.coeff) + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace surreal
