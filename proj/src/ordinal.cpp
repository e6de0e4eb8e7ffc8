#include "maharam/ordinal.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>

#include "maharam/errors.hpp"

namespace maharam {

namespace {

std::atomic<unsigned> g_tower_limit{16};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) raise(ErrorCode::Limit, "ordinal coefficient overflow");
  return r;
}

std::uint64_t checked_add_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) raise(ErrorCode::Limit, "ordinal coefficient overflow");
  return r;
}

}  // namespace

Ordinal Ordinal::from_nat(std::uint64_t n) {
  Ordinal r;
  if (n) r.terms_.push_back({Ordinal(), n});
  return r;
}

Ordinal Ordinal::omega() { return single(from_nat(1), 1); }

Ordinal Ordinal::single(const Ordinal& exp, std::uint64_t coeff) {
  if (coeff == 0) raise(ErrorCode::Precondition, "zero coefficient in ordinal term");
  Ordinal r;
  r.terms_.push_back({exp, coeff});
  return r;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff == 0) raise(ErrorCode::Precondition, "zero coefficient in ordinal term");
    if (i > 0 && compare(terms[i - 1].exp, terms[i].exp) != Cmp::GT)
      raise(ErrorCode::Precondition, "ordinal terms not strictly decreasing");
  }
  Ordinal r;
  r.terms_ = std::move(terms);
  return r;
}

bool Ordinal::is_finite() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero()); }

std::uint64_t Ordinal::to_nat() const {
  if (terms_.empty()) return 0;
  if (!is_finite()) raise(ErrorCode::Precondition, "ordinal is not finite");
  return terms_[0].coeff;
}

const Ordinal& Ordinal::leading_exp() const {
  if (terms_.empty()) raise(ErrorCode::Precondition, "zero ordinal has no leading term");
  return terms_[0].exp;
}

std::uint64_t Ordinal::leading_coeff() const {
  if (terms_.empty()) raise(ErrorCode::Precondition, "zero ordinal has no leading term");
  return terms_[0].coeff;
}

unsigned Ordinal::depth() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exp.depth());
  return terms_.empty() ? 0 : d + 1;
}

std::string Ordinal::to_string() const { return render(*this); }

Cmp compare(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0;; ++i) {
    if (i == ta.size() && i == tb.size()) return Cmp::EQ;
    if (i == ta.size()) return Cmp::LT;
    if (i == tb.size()) return Cmp::GT;
    Cmp c = compare(ta[i].exp, tb[i].exp);
    if (c != Cmp::EQ) return c;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff ? Cmp::LT : Cmp::GT;
  }
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead = b.terms()[0].exp;
  std::vector<Term> out;
  std::uint64_t merged = b.terms()[0].coeff;
  for (const auto& t : a.terms()) {
    Cmp c = compare(t.exp, lead);
    if (c == Cmp::GT) {
      out.push_back(t);
    } else {
      if (c == Cmp::EQ) merged = checked_add_u64(merged, t.coeff);
      break;
    }
  }
  out.push_back({lead, merged});
  out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal nat_sum(const Ordinal& a, const Ordinal& b) {
  std::vector<Term> out;
  std::size_t i = 0, j = 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  while (i < ta.size() || j < tb.size()) {
    if (i == ta.size()) {
      out.push_back(tb[j++]);
    } else if (j == tb.size()) {
      out.push_back(ta[i++]);
    } else {
      Cmp c = compare(ta[i].exp, tb[j].exp);
      if (c == Cmp::GT)
        out.push_back(ta[i++]);
      else if (c == Cmp::LT)
        out.push_back(tb[j++]);
      else {
        out.push_back({ta[i].exp, checked_add_u64(ta[i].coeff, tb[j].coeff)});
        ++i, ++j;
      }
    }
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  Ordinal acc;
  for (const auto& t : b.terms()) {
    if (!t.exp.is_zero()) {
      acc = add(acc, Ordinal::single(add(a.leading_exp(), t.exp), t.coeff));
    } else {
      // a * n = w^e0 * (c0 * n) + (a minus its leading term)
      Ordinal chunk = Ordinal::single(a.leading_exp(), checked_mul(a.leading_coeff(), t.coeff));
      std::vector<Term> tail(a.terms().begin() + 1, a.terms().end());
      acc = add(acc, add(chunk, Ordinal::from_terms(std::move(tail))));
    }
  }
  return acc;
}

Ordinal omega_pow(const Ordinal& a) {
  Ordinal r = Ordinal::single(a, 1);
  if (r.depth() > tower_limit())
    raise(ErrorCode::Limit,
          "w-tower deeper than the configured limit (" + std::to_string(tower_limit()) + ")");
  return r;
}

Ordinal pow_omega(const Ordinal& a) {
  if (a.is_zero()) return Ordinal();
  if (a.is_finite()) return a.to_nat() == 1 ? a : Ordinal::omega();
  return omega_pow(mul(a.leading_exp(), Ordinal::omega()));
}

unsigned tower_limit() { return g_tower_limit.load(); }
void set_tower_limit(unsigned limit) { g_tower_limit.store(limit); }

Ordinal decode(std::uint64_t m) {
  if (m == 0) return Ordinal();
  std::vector<unsigned> bits;  // descending
  for (int x = 63; x >= 0; --x)
    if (m >> x & 1) bits.push_back(static_cast<unsigned>(x));
  std::size_t k = bits.size();
  std::vector<Ordinal> exps;
  exps.reserve(k);
  for (std::size_t i = 0; i < k; ++i) exps.push_back(decode(bits[i] - (k - 1 - i)));
  std::sort(exps.begin(), exps.end(), [](const Ordinal& x, const Ordinal& y) { return y < x; });
  std::vector<Term> terms;
  for (const auto& e : exps) {
    if (!terms.empty() && terms.back().exp == e)
      ++terms.back().coeff;
    else
      terms.push_back({e, 1});
  }
  return Ordinal::from_terms(std::move(terms));
}

std::optional<std::uint64_t> code(const Ordinal& a) {
  if (a.is_zero()) return 0;
  std::vector<std::uint64_t> ms;  // exponent codes with multiplicity
  for (const auto& t : a.terms()) {
    if (t.coeff > 64 || ms.size() + t.coeff > 64) return std::nullopt;
    auto ce = code(t.exp);
    if (!ce) return std::nullopt;
    for (std::uint64_t c = 0; c < t.coeff; ++c) ms.push_back(*ce);
  }
  std::sort(ms.rbegin(), ms.rend());
  std::uint64_t n = 0;
  std::size_t k = ms.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t x = ms[i] + (k - 1 - i);
    if (x >= 64) return std::nullopt;
    n |= std::uint64_t{1} << x;
  }
  return n;
}

bool code_leq(const Ordinal& a, std::uint64_t n) {
  auto c = code(a);
  return c && *c <= n;
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos == s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      raise(ErrorCode::Parse,
            std::string("expected '") + c + "' at position " + std::to_string(pos));
  }
  std::uint64_t nat() {
    skip_ws();
    if (pos == s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      raise(ErrorCode::Parse, "expected a number at position " + std::to_string(pos));
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::uint64_t d = static_cast<std::uint64_t>(s[pos] - '0');
      if (v > (UINT64_MAX - d) / 10) raise(ErrorCode::Limit, "number too large");
      v = v * 10 + d;
      ++pos;
    }
    return v;
  }
};

Ordinal parse_expr(Cursor& cur);

// TERM of the strict grammar; also the atom of the calculator grammar.
Ordinal parse_term(Cursor& cur, bool calculator) {
  char c = cur.peek();
  if (calculator && c == '(') {
    cur.expect('(');
    Ordinal inner = parse_expr(cur);
    cur.expect(')');
    return inner;
  }
  if (c == 'w') {
    ++cur.pos;
    Ordinal exp = Ordinal::from_nat(1);
    if (cur.accept('^')) {
      cur.expect('(');
      exp = parse_expr(cur);
      cur.expect(')');
    }
    std::uint64_t coeff = 1;
    if (!calculator && cur.accept('*')) coeff = cur.nat();
    if (coeff == 0) raise(ErrorCode::Parse, "coefficient must be positive");
    Ordinal base = omega_pow(exp);  // also enforces the tower limit
    return coeff == 1 ? base : Ordinal::single(exp, coeff);
  }
  std::uint64_t n = cur.nat();
  return Ordinal::from_nat(n);
}

Ordinal parse_product(Cursor& cur) {
  Ordinal acc = parse_term(cur, true);
  while (cur.accept('*')) acc = mul(acc, parse_term(cur, true));
  return acc;
}

Ordinal parse_expr(Cursor& cur) {
  Ordinal acc = parse_product(cur);
  for (;;) {
    if (cur.accept('+'))
      acc = add(acc, parse_product(cur));
    else if (cur.accept('#'))
      acc = nat_sum(acc, parse_product(cur));
    else
      return acc;
  }
}

}  // namespace

Ordinal parse(std::string_view text, bool normalize) {
  Cursor cur{text};
  std::vector<Term> terms;
  if (cur.peek() == '0') {
    ++cur.pos;
    if (!cur.eof()) raise(ErrorCode::Parse, "trailing input after 0");
    return Ordinal();
  }
  for (;;) {
    Ordinal t = parse_term(cur, false);
    if (t.is_zero() || t.terms().size() != 1)
      raise(ErrorCode::Parse, "expected a single normal-form term");
    terms.push_back(t.terms()[0]);
    if (!cur.accept('+')) break;
  }
  if (!cur.eof()) raise(ErrorCode::Parse, "unexpected input at position " + std::to_string(cur.pos));
  bool sorted = true;
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (compare(terms[i - 1].exp, terms[i].exp) != Cmp::GT) sorted = false;
  if (sorted) return Ordinal::from_terms(std::move(terms));
  if (!normalize) raise(ErrorCode::Parse, "terms are not in strictly decreasing exponent order");
  Ordinal acc;
  for (auto& t : terms) acc = add(acc, Ordinal::single(t.exp, t.coeff));
  return acc;
}

Ordinal eval(std::string_view expr) {
  Cursor cur{expr};
  Ordinal r = parse_expr(cur);
  if (!cur.eof()) raise(ErrorCode::Parse, "unexpected input at position " + std::to_string(cur.pos));
  return r;
}

std::string render(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < a.terms().size(); ++i) {
    const Term& t = a.terms()[i];
    if (i) out += " + ";
    if (t.exp.is_zero()) {
      out += std::to_string(t.coeff);
      continue;
    }
    if (t.exp.is_finite() && t.exp.to_nat() == 1)
      out += "w";
    else
      out += "w^(" + render(t.exp) + ")";
    if (t.coeff != 1) out += "*" + std::to_string(t.coeff);
  }
  return out;
}

}  // namespace maharam
