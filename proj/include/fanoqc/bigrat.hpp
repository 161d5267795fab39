#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <ostream>
#include <string>
#include <string_view>

#include "fanoqc/error.hpp"

namespace fanoqc {

/// Exact rational number. Always in lowest terms with positive denominator;
/// every operation is exact.
class BigRat {
 public:
  BigRat() : v_(0) {}
  BigRat(long n) : v_(n) {}  // NOLINT: implicit by design, matches integer literals
  BigRat(int n) : v_(static_cast<long>(n)) {}
  BigRat(long num, long den) {
    if (den == 0) throw DivisionByZero();
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit BigRat(const std::string& text) {
    try {
      v_ = mpq_class(text);
    } catch (const std::invalid_argument&) {
      throw ParseError("not a rational: '" + text + "'");
    }
    if (v_.get_den() == 0) throw DivisionByZero();
    v_.canonicalize();
  }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
  BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
  BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
  BigRat& operator/=(const BigRat& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
  }

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }
  BigRat operator-() const {
    BigRat r;
    r.v_ = -v_;
    return r;
  }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const BigRat& a, const BigRat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const BigRat& a, const BigRat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const BigRat& a, const BigRat& b) { return a.v_ >= b.v_; }

  BigRat abs() const { return sign() < 0 ? -*this : *this; }

  /// "n" for integers, "n/d" otherwise.
  std::string str() const { return v_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const BigRat& r) {
    return os << r.v_;
  }

 private:
  mpq_class v_;
};

inline BigRat factorial(int n) {
  BigRat r(1);
  for (int i = 2; i <= n; ++i) r *= BigRat(i);
  return r;
}

inline BigRat pow(const BigRat& base, int exp) {
  if (exp < 0) return BigRat(1) / pow(base, -exp);
  BigRat r(1);
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace fanoqc
