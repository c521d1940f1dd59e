#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cyclometria/rational.hpp"

namespace cyclometria {

/// mantissa * 10^-scale. Arithmetic at a common scale is exact.
class FixedDecimal {
 public:
  FixedDecimal() = default;
  FixedDecimal(BigInt mantissa, unsigned scale) : mantissa_(std::move(mantissa)), scale_(scale) {}

  static FixedDecimal from_integer(const BigInt& value) { return FixedDecimal(value, 0); }

  const BigInt& mantissa() const { return mantissa_; }
  unsigned scale() const { return scale_; }
  int sign() const { return sgn(mantissa_); }

  /// Same value at a larger scale. Throws std::invalid_argument if
  /// new_scale < scale().
  FixedDecimal widened(unsigned new_scale) const;

  // Rescaling that may drop digits. truncated() goes toward zero; floor/ceil
  // are used for outward rounding of enclosures; rounded() is half away
  // from zero and only exists for comparing against printed rounded values.
  FixedDecimal truncated(unsigned new_scale) const;
  FixedDecimal floored(unsigned new_scale) const;
  FixedDecimal ceiled(unsigned new_scale) const;
  FixedDecimal rounded(unsigned new_scale) const;

  BigRational to_rational() const;

  /// Plain decimal notation, e.g. "3.1415", "-0.05", "42".
  std::string to_string() const;
  /// Inverse of to_string(); throws std::invalid_argument.
  static FixedDecimal parse(std::string_view text);

  /// One unit in the last place.
  FixedDecimal ulp() const { return FixedDecimal(1, scale_); }

  friend FixedDecimal operator+(const FixedDecimal& a, const FixedDecimal& b);
  friend FixedDecimal operator-(const FixedDecimal& a, const FixedDecimal& b);
  friend FixedDecimal operator*(const FixedDecimal& a, const FixedDecimal& b);
  friend FixedDecimal operator-(const FixedDecimal& a) { return FixedDecimal(-a.mantissa_, a.scale_); }

  /// Value comparison; 3.10 == 3.1.
  friend bool operator==(const FixedDecimal& a, const FixedDecimal& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
  friend std::strong_ordering operator<=>(const FixedDecimal& a, const FixedDecimal& b);

  friend std::strong_ordering operator<=>(const FixedDecimal& a, const BigRational& b) {
    return a.to_rational() <=> b;
  }

  bool identical(const FixedDecimal& other) const {
    return scale_ == other.scale_ && mantissa_ == other.mantissa_;
  }

 private:
  BigInt mantissa_ = 0;
  unsigned scale_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FixedDecimal& x);

/// r truncated toward zero to `scale` fraction digits. For r >= 0 this is
/// floor(r * 10^scale) * 10^-scale.
FixedDecimal decimal_expand(const BigRational& r, unsigned scale);

/// Largest s with s*s <= n, by Newton iteration. Throws std::domain_error
/// for negative n.
BigInt integer_sqrt_floor(const BigInt& n);

/// Truncated square root: r*r <= x < (r + 10^-scale)^2.
FixedDecimal fd_sqrt(const FixedDecimal& x, unsigned scale);

/// Digits grouped outward from the decimal point, e.g. "3.14159 26535".
/// The integer part is grouped leftward, the fraction rightward.
std::string format_grouped(const FixedDecimal& x, unsigned group = 5);

/// Inverse of format_grouped (spaces are ignored, at most one point).
FixedDecimal parse_grouped(std::string_view text);

/// Column layout of the examination table: the integer digits share a cell
/// with the first five fraction digits, later cells hold five digits each.
/// Leading zeros are suppressed and all-zero leading cells are left empty,
/// so column positions survive: 3.1428571428 -> {"314285", "71428"},
/// 0.0012644892 -> {"126", "44892"}, 0.000000266764189 -> {"", "2667", "64189"}.
std::vector<std::string> table_cells(const FixedDecimal& x, unsigned group = 5);

/// Non-empty table_cells joined by single spaces: "314159 26535 89793".
std::string format_table_digits(const FixedDecimal& x, unsigned group = 5);

}  // namespace cyclometria
