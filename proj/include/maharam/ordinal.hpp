#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace maharam {

struct Term;

// An ordinal below epsilon_0 in Cantor normal form: a sum of terms
// w^exponent * coefficient with strictly decreasing exponents and positive
// coefficients. The empty sum is 0. Values are immutable once built.
class Ordinal {
public:
  Ordinal() = default;  // zero

  static Ordinal from_nat(std::uint64_t n);
  static Ordinal omega();
  // Single term w^exp * coeff; coeff must be >= 1.
  static Ordinal single(const Ordinal& exp, std::uint64_t coeff);
  // Validates strict exponent descent and positive coefficients.
  static Ordinal from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  // Requires is_finite().
  std::uint64_t to_nat() const;

  const std::vector<Term>& terms() const { return terms_; }
  const Ordinal& leading_exp() const;
  std::uint64_t leading_coeff() const;

  // Nesting depth of the w-tower: 0 for 0, 1 for positive naturals,
  // 1 + depth of the deepest exponent otherwise.
  unsigned depth() const;

  std::string to_string() const;

private:
  std::vector<Term> terms_;
};

struct Term {
  Ordinal exp;
  std::uint64_t coeff = 1;
};

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

Cmp compare(const Ordinal& a, const Ordinal& b);

inline bool operator==(const Ordinal& a, const Ordinal& b) { return compare(a, b) == Cmp::EQ; }
inline bool operator!=(const Ordinal& a, const Ordinal& b) { return compare(a, b) != Cmp::EQ; }
inline bool operator<(const Ordinal& a, const Ordinal& b) { return compare(a, b) == Cmp::LT; }
inline bool operator<=(const Ordinal& a, const Ordinal& b) { return compare(a, b) != Cmp::GT; }
inline bool operator>(const Ordinal& a, const Ordinal& b) { return compare(a, b) == Cmp::GT; }
inline bool operator>=(const Ordinal& a, const Ordinal& b) { return compare(a, b) != Cmp::LT; }

// Ordinal sum (non-commutative: add(1, w) = w).
Ordinal add(const Ordinal& a, const Ordinal& b);
// Ordinal product (non-commutative, left-distributive over the right factor).
Ordinal mul(const Ordinal& a, const Ordinal& b);
// Hessenberg sum: coefficient-wise CNF addition; commutative and associative.
Ordinal nat_sum(const Ordinal& a, const Ordinal& b);
// w^a; refuses results deeper than the tower limit.
Ordinal omega_pow(const Ordinal& a);
// a^w evaluated in supremum form; used by the rank bound calculator.
Ordinal pow_omega(const Ordinal& a);

// Maximum permitted w-tower depth (default 16).
unsigned tower_limit();
void set_tower_limit(unsigned limit);

// Fixed bijection between naturals and ordinals below epsilon_0.
//
// decode(m): write m in binary as 2^{x_0} + ... + 2^{x_{k-1}} with
// x_0 > ... > x_{k-1}, put m_i = x_i - (k-1-i), and return the ordinal whose
// CNF exponent multiset is { decode(m_i) : i < k }. decode(0) = 0.
// code is the exact inverse; it returns nullopt when the value would not fit
// in 64 bits (any such code exceeds every representable level, so order
// comparisons against machine naturals stay sound).
Ordinal decode(std::uint64_t m);
std::optional<std::uint64_t> code(const Ordinal& a);
// code(a) <= n, correct even when code(a) overflows 64 bits.
bool code_leq(const Ordinal& a, std::uint64_t n);

// Strict text form:
//   EXPR := "0" | TERM ("+" TERM)*
//   TERM := "w" | "w^(" EXPR ")" | "w*" NAT | "w^(" EXPR ")*" NAT | NAT>=1
// Terms must appear in strictly decreasing exponent order; with
// normalize=true a non-normal sum is folded left-to-right with add().
Ordinal parse(std::string_view text, bool normalize = false);

// Calculator grammar used by the CLI: "+", "*", "#" (natural sum),
// "w^( )" and parentheses, evaluated with the usual precedence ^ > * > +,#.
Ordinal eval(std::string_view expr);

// Inverse of parse: "w^(w)*2 + w + 3" style, "0" for zero.
std::string render(const Ordinal& a);

}  // namespace maharam
