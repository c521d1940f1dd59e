#include "cyclometria/rational.hpp"

#include <stdexcept>

namespace cyclometria {

BigInt pow10(unsigned exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::domain_error("floor_div: division by zero");
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::domain_error("ceil_div: division by zero");
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start) throw std::invalid_argument("empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw std::invalid_argument("malformed integer literal: '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

BigRational::BigRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::invalid_argument("BigRational: zero denominator");
  normalize();
}

void BigRational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = gcd(num_, den_);
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

BigRational BigRational::abs() const { return num_ < 0 ? -*this : *this; }

BigRational BigRational::reciprocal() const {
  if (num_ == 0) throw std::domain_error("BigRational: reciprocal of zero");
  return BigRational(den_, num_);
}

std::string BigRational::to_string() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

BigRational BigRational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text));
  return BigRational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("BigRational: division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

BigRational operator-(const BigRational& a) {
  BigRational r = a;
  r.num_ = -r.num_;
  return r;
}

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
  int c = cmp(BigInt(a.num_ * b.den_), BigInt(b.num_ * a.den_));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigRational make_rational(const BigInt& num, const BigInt& den) { return BigRational(num, den); }

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

}  // namespace cyclometria
