#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cyclometria {

using BigInt = mpz_class;

/// 10^exponent as an unbounded integer.
BigInt pow10(unsigned exponent);

/// Quotient rounded toward negative infinity; divisor must be nonzero.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);

BigInt parse_integer(std::string_view text);

/// Exact ratio of unbounded integers, always kept in lowest terms with a
/// positive denominator.
class BigRational {
 public:
  BigRational() : num_(0), den_(1) {}
  BigRational(long value) : num_(value), den_(1) {}  // NOLINT(implicit)
  BigRational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT(implicit)

  /// Throws std::invalid_argument when den == 0.
  BigRational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  int sign() const { return sgn(num_); }
  BigInt floor() const { return floor_div(num_, den_); }
  BigInt ceil() const { return ceil_div(num_, den_); }
  BigRational abs() const;
  BigRational reciprocal() const;

  /// "p/q", or just "p" when the denominator is one.
  std::string to_string() const;
  /// Accepts "p/q" or "p"; throws std::invalid_argument.
  static BigRational parse(std::string_view text);

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a);

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

/// Normalized num/den. Throws std::invalid_argument on a zero denominator.
BigRational make_rational(const BigInt& num, const BigInt& den);

std::ostream& operator<<(std::ostream& os, const BigRational& r);

}  // namespace cyclometria
