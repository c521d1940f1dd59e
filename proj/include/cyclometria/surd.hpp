#pragma once

#include <string>

#include "cyclometria/enclosure.hpp"
#include "cyclometria/rational.hpp"

namespace cyclometria {

/// a + b*sqrt(3) with rational a, b. Every length in the semicircle
/// construction lives in this field (or is the root of an element of it).
class Surd3 {
 public:
  Surd3() = default;
  Surd3(BigRational a) : a_(std::move(a)) {}  // NOLINT(implicit)
  Surd3(long a) : a_(a) {}                    // NOLINT(implicit)
  Surd3(BigRational a, BigRational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Surd3 sqrt3() { return Surd3(0, 1); }

  const BigRational& rational_part() const { return a_; }
  const BigRational& surd_part() const { return b_; }

  /// Exact sign.
  int sign() const;

  /// Width at most 10^-scale.
  Enclosure enclose(unsigned scale) const;

  /// "a + b√3".
  std::string to_string() const;

  friend Surd3 operator+(const Surd3& x, const Surd3& y) { return Surd3(x.a_ + y.a_, x.b_ + y.b_); }
  friend Surd3 operator-(const Surd3& x, const Surd3& y) { return Surd3(x.a_ - y.a_, x.b_ - y.b_); }
  friend Surd3 operator-(const Surd3& x) { return Surd3(-x.a_, -x.b_); }
  friend Surd3 operator*(const Surd3& x, const Surd3& y) {
    return Surd3(x.a_ * y.a_ + BigRational(3) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
  }
  friend Surd3 operator/(const Surd3& x, const BigRational& d) { return Surd3(x.a_ / d, x.b_ / d); }
  friend bool operator==(const Surd3&, const Surd3&) = default;

 private:
  BigRational a_;
  BigRational b_;
};

/// Enclosure of sqrt(v) for v > 0, width at most 10^-scale when v >= 1/4.
Enclosure sqrt_enclosure(const Surd3& v, unsigned scale);

}  // namespace cyclometria
