#pragma once

#include <gmp.h>
#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

namespace maharam {

// Exact nonnegative rational with small components, e.g. the exponents a_k.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  bool is_zero() const { return num == 0; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

class BigInt {
public:
  BigInt() { mpz_init(z_); }
  explicit BigInt(unsigned long v) { mpz_init_set_ui(z_, v); }
  BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
  BigInt(BigInt&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  BigInt& operator=(BigInt o) {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~BigInt() { mpz_clear(z_); }

  static BigInt pow2(unsigned long e) {
    BigInt r(1);
    mpz_mul_2exp(r.z_, r.z_, e);
    return r;
  }

  bool fits_u64() const { return mpz_fits_ulong_p(z_); }
  std::uint64_t to_u64() const { return mpz_get_ui(z_); }
  std::string to_string() const {
    char* s = mpz_get_str(nullptr, 10, z_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
  }

  int cmp(const BigInt& o) const { return mpz_cmp(z_, o.z_); }
  int cmp_u64(std::uint64_t v) const { return mpz_cmp_ui(z_, v); }
  friend bool operator==(const BigInt& a, const BigInt& b) { return a.cmp(b) == 0; }

  const mpz_t& raw() const { return z_; }

private:
  mpz_t z_;
};

// 200-bit floating point value. All arithmetic rounds to nearest.
class BigFloat {
public:
  static constexpr int kPrecision = 200;

  BigFloat() { mpfr_init2(f_, kPrecision); mpfr_set_zero(f_, 1); }
  explicit BigFloat(long v) {
    mpfr_init2(f_, kPrecision);
    mpfr_set_si(f_, v, MPFR_RNDN);
  }
  explicit BigFloat(const Rational& q) {
    mpfr_init2(f_, kPrecision);
    mpfr_set_si(f_, q.num, MPFR_RNDN);
    mpfr_div_si(f_, f_, q.den, MPFR_RNDN);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(f_, kPrecision);
    mpfr_set(f_, o.f_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(f_, kPrecision);
    mpfr_swap(f_, o.f_);
  }
  BigFloat& operator=(BigFloat o) {
    mpfr_swap(f_, o.f_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(f_); }

  static BigFloat from_bigint(const BigInt& z) {
    BigFloat r;
    mpfr_set_z(r.f_, z.raw(), MPFR_RNDN);
    return r;
  }
  // 2^e for a (possibly non-integral) exponent.
  static BigFloat exp2(const BigFloat& e) {
    BigFloat r;
    mpfr_exp2(r.f_, e.f_, MPFR_RNDN);
    return r;
  }

  BigFloat& operator+=(const BigFloat& o) {
    mpfr_add(f_, f_, o.f_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator*=(const BigFloat& o) {
    mpfr_mul(f_, f_, o.f_, MPFR_RNDN);
    return *this;
  }
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r;
    mpfr_div(r.f_, a.f_, b.f_, MPFR_RNDN);
    return r;
  }

  // this^q via exp2(q * log2(this)); exact when q is integral.
  BigFloat pow(const Rational& q) const {
    if (q.num == 0) return BigFloat(1);
    BigFloat e;
    mpfr_log2(e.f_, f_, MPFR_RNDN);
    mpfr_mul_si(e.f_, e.f_, q.num, MPFR_RNDN);
    mpfr_div_si(e.f_, e.f_, q.den, MPFR_RNDN);
    return exp2(e);
  }

  int cmp(const BigFloat& o) const { return mpfr_cmp(f_, o.f_); }
  // |this - o| <= 2^-64 counts as "within tolerance".
  bool within_tolerance(const BigFloat& o) const {
    BigFloat d;
    mpfr_sub(d.f_, f_, o.f_, MPFR_RNDN);
    mpfr_abs(d.f_, d.f_, MPFR_RNDN);
    BigFloat tol(1);
    mpfr_div_2ui(tol.f_, tol.f_, 64, MPFR_RNDN);
    return mpfr_cmp(d.f_, tol.f_) <= 0;
  }

  double to_double() const { return mpfr_get_d(f_, MPFR_RNDN); }

  // Fixed 40 significant digits; deterministic across runs.
  std::string to_string() const {
    if (mpfr_zero_p(f_)) return "0";
    mpfr_exp_t exp = 0;
    char* s = mpfr_get_str(nullptr, &exp, 10, 40, f_, MPFR_RNDN);
    std::string digits(s);
    mpfr_free_str(s);
    std::string sign;
    if (!digits.empty() && digits[0] == '-') {
      sign = "-";
      digits.erase(0, 1);
    }
    return sign + "0." + digits + "e" + std::to_string(static_cast<long>(exp));
  }

private:
  mpfr_t f_;
};

}  // namespace maharam
