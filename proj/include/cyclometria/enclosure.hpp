#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "cyclometria/fixed_decimal.hpp"
#include "cyclometria/rational.hpp"

namespace cyclometria {

enum class Ordering { Less, Greater, Inconclusive };

std::string to_string(Ordering o);

/// Raised when adaptive precision would exceed its configured ceiling.
class PrecisionCeilingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed interval [lo, hi] of decimals at one scale, bracketing a real value.
class Enclosure {
 public:
  /// Brings both ends to the larger scale. Throws std::invalid_argument when
  /// lo > hi.
  Enclosure(FixedDecimal lo, FixedDecimal hi);

  /// The point 0.
  Enclosure() = default;

  /// Degenerate enclosure of an exact decimal.
  explicit Enclosure(const FixedDecimal& exact) : Enclosure(exact, exact) {}

  const FixedDecimal& lo() const { return lo_; }
  const FixedDecimal& hi() const { return hi_; }
  unsigned scale() const { return lo_.scale(); }
  FixedDecimal width() const { return hi_ - lo_; }

  bool contains(const BigRational& r) const;
  /// Whether `inner` lies entirely within this enclosure.
  bool contains(const Enclosure& inner) const;
  bool overlaps(const Enclosure& other) const;

  /// Outward rounding to a (usually coarser) scale; the result contains this.
  Enclosure outward(unsigned new_scale) const;

  /// The truncated decimal at `scale` when both ends agree on it, which
  /// certifies it for every value inside.
  std::optional<FixedDecimal> common_truncation(unsigned scale) const;
  /// Same for half-up rounding.
  std::optional<FixedDecimal> common_rounding(unsigned scale) const;
  /// floor() of the enclosed value when both ends agree.
  std::optional<BigInt> common_floor() const;

  std::string to_string() const;

 private:
  FixedDecimal lo_;
  FixedDecimal hi_;
};

/// Tightest enclosure of r at `scale`: [floor, ceil].
Enclosure enclose(const BigRational& r, unsigned scale);

Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a);
Enclosure operator+(const Enclosure& a, const BigRational& r);
Enclosure operator-(const BigRational& r, const Enclosure& a);
Enclosure operator-(const Enclosure& a, const BigRational& r);
/// Interval product, exact (scales add).
Enclosure operator*(const Enclosure& a, const Enclosure& b);

/// Enclosure of sqrt(v) at `scale`. Requires lo >= 0.
Enclosure sqrt(const Enclosure& v, unsigned scale);

/// Enclosure of 1/v at `scale`. Requires 0 < lo.
Enclosure reciprocal(const Enclosure& v, unsigned scale);

/// Order of the enclosed value against r: Less means value < r.
Ordering compare(const Enclosure& v, const BigRational& r);
/// Order of a's value against b's; Inconclusive when they overlap.
Ordering compare(const Enclosure& a, const Enclosure& b);

/// A real number given by enclosures at any requested scale; each call must
/// return width at most 10^-scale.
using RealEvaluator = std::function<Enclosure(unsigned scale)>;

/// Truncated digits of an evaluator at `scale`, raising the working scale
/// until the enclosure no longer straddles a digit boundary. Throws
/// PrecisionCeilingError past max_scale.
FixedDecimal certified_truncation(const RealEvaluator& value, unsigned scale, unsigned max_scale = 10000);
FixedDecimal certified_rounding(const RealEvaluator& value, unsigned scale, unsigned max_scale = 10000);
BigInt certified_floor(const RealEvaluator& value, unsigned max_scale = 10000);

}  // namespace cyclometria
