#include "lpbp/bigint.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace lpbp {

BigInt BigInt::from_string(const std::string& decimal) {
  mpz_class v;
  if (decimal.empty() || v.set_str(decimal, 10) != 0) {
    throw std::invalid_argument("not a decimal integer: '" + decimal + "'");
  }
  return BigInt(std::move(v));
}

bool BigInt::divisible_by(const BigInt& d) const {
  if (d.is_zero()) return is_zero();
  return mpz_divisible_p(v_.get_mpz_t(), d.v_.get_mpz_t()) != 0;
}

BigInt BigInt::exact_div(const BigInt& d) const {
  if (d.is_zero()) throw std::logic_error("exact_div: division by zero");
  if (!divisible_by(d)) {
    throw std::logic_error("exact_div: " + to_string() + " is not divisible by " + d.to_string());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
  return BigInt(std::move(q));
}

bool BigInt::fits_int64() const { return v_.fits_slong_p(); }

std::int64_t BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("BigInt does not fit in 64 bits: " + to_string());
  return v_.get_si();
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw std::logic_error("Rational: zero denominator");
  q_ = mpq_class(num.raw(), den.raw());
  q_.canonicalize();
}

BigInt Rational::to_integer() const {
  if (!is_integer()) throw std::logic_error("Rational " + to_string() + " is not an integer");
  return numerator();
}

std::string Rational::to_string() const { return q_.get_str(10); }

}  // namespace lpbp
