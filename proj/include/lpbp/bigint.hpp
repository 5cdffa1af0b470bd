#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace lpbp {

/// Arbitrary-precision signed integer.
///
/// Counting functions only ever return nonnegative values; the sign is
/// there so closed forms can carry negative intermediate terms such as
/// `m*C(k,c)*C(l,c) - n*C(k-1,c-1)*C(l+1,c+1)` without reordering.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v) : v_(static_cast<long>(v)) {}  // NOLINT(implicit)
  explicit BigInt(mpz_class v) : v_(std::move(v)) {}

  static BigInt from_string(const std::string& decimal);

  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  BigInt operator-() const { return BigInt(mpz_class(-v_)); }

  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  bool is_negative() const { return sgn(v_) < 0; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_even() const { return mpz_even_p(v_.get_mpz_t()) != 0; }
  bool divisible_by(const BigInt& d) const;

  /// Quotient of an exact division. Throws std::logic_error when the
  /// remainder is nonzero or the divisor is zero.
  BigInt exact_div(const BigInt& d) const;

  std::string to_string() const { return v_.get_str(10); }
  bool fits_int64() const;
  std::int64_t to_int64() const;
  const mpz_class& raw() const { return v_; }

 private:
  mpz_class v_;
};

/// Nonnegative count; every counting routine returns one of these.
using BigCount = BigInt;

std::ostream& operator<<(std::ostream& os, const BigInt& v);

/// Exact rational in lowest terms, for the few closed forms whose
/// individual terms are not integral (e.g. N_n for odd a+b).
class Rational {
 public:
  Rational() = default;
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const BigInt& v) : Rational(v, BigInt(1)) {}

  BigInt numerator() const { return BigInt(mpz_class(q_.get_num())); }
  BigInt denominator() const { return BigInt(mpz_class(q_.get_den())); }
  bool is_integer() const { return q_.get_den() == 1; }
  /// Throws std::logic_error unless the value is integral.
  BigInt to_integer() const;
  std::string to_string() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }

 private:
  mpq_class q_{0};
};

}  // namespace lpbp
