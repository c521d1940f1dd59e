#include "cyclometria/pi_oracle.hpp"

#include <algorithm>
#include <cmath>

namespace cyclometria {
namespace {

struct SeriesSum {
  BigInt value;       // scaled by 10^P
  BigInt error_ulps;  // |true - value| < error_ulps
};

// atan(1/x) * 10^P = sum_k (-1)^k 10^P / ((2k+1) x^(2k+1)).
//
// Let a_k = 10^P / x^(2k+1) exactly and p_k the computed power, with
// p_0 = floor(10^P / x) and p_k = floor(p_{k-1} / x^2). The deficit
// d_k = a_k - p_k satisfies d_0 < 1 and d_k < d_{k-1}/x^2 + 1, so d_k < 2
// for x >= 2. The computed term floor(p_k / (2k+1)) is then below the true
// term by less than d_k/(2k+1) + 1 < 3 ulps. Summation stops at the first
// computed term equal to zero; that true term is < 3 ulps, and the
// alternating tail with decreasing terms is bounded by its first term.
// Hence |error| < 3 * (terms + 1) ulps.
SeriesSum arctan_inverse(unsigned long x, unsigned precision) {
  BigInt x2 = BigInt(x) * x;
  BigInt power = pow10(precision) / x;
  BigInt sum = 0;
  unsigned long terms = 0;
  for (unsigned long k = 0;; ++k) {
    BigInt term = power / (2 * k + 1);
    if (term == 0) break;
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    ++terms;
    power /= x2;
  }
  return {sum, BigInt(3 * (terms + 1))};
}

}  // namespace

Enclosure machin_pi(unsigned working_digits) {
  SeriesSum a = arctan_inverse(5, working_digits);
  SeriesSum b = arctan_inverse(239, working_digits);
  BigInt centre = 16 * a.value - 4 * b.value;
  BigInt error = 16 * a.error_ulps + 4 * b.error_ulps;
  return Enclosure(FixedDecimal(centre - error, working_digits), FixedDecimal(centre + error, working_digits));
}

Enclosure PiOracle::enclosure(unsigned digits) {
  if (digits < 1) throw std::invalid_argument("pi enclosure needs at least one digit");
  if (digits > options_.max_digits) {
    throw PrecisionCeilingError("pi enclosure of " + std::to_string(digits) + " digits exceeds the ceiling of " +
                                std::to_string(options_.max_digits));
  }
  // The cached interval must be at most 10^-(digits+1) wide; rounding it
  // outward to digits+2 places then adds at most 2*10^-(digits+2).
  FixedDecimal needed(1, digits + 1);
  std::lock_guard lock(mutex_);
  if (!cache_ || cache_->width() > needed) {
    // Total error is about 16*3*(0.72 P) ulps, so log10(35 P) + 2 guard
    // digits suffice; the width check below is the actual guarantee.
    unsigned guard = static_cast<unsigned>(std::ceil(std::log10(35.0 * (digits + 10)))) + 2;
    Enclosure fresh = machin_pi(digits + 1 + guard);
    while (fresh.width() > needed) {
      guard += 2;
      fresh = machin_pi(digits + 1 + guard);
    }
    if (cache_) {
      unsigned s = std::max(cache_->scale(), fresh.scale());
      FixedDecimal lo = std::max(cache_->lo().widened(s), fresh.lo().widened(s));
      FixedDecimal hi = std::min(cache_->hi().widened(s), fresh.hi().widened(s));
      cache_ = Enclosure(lo, hi);
    } else {
      cache_ = fresh;
    }
  }
  if (cache_->scale() <= digits + 2) return *cache_;
  return cache_->outward(digits + 2);
}

std::string PiOracle::digits(unsigned n) {
  if (n < 1) throw std::invalid_argument("pi_digits needs n >= 1");
  {
    std::lock_guard lock(mutex_);
    if (digit_cache_.size() >= n) return digit_cache_.substr(0, n);
  }
  for (unsigned extra = 4;; extra *= 2) {
    Enclosure e = enclosure(std::min(n + extra, options_.max_digits));
    if (auto t = e.common_truncation(n - 1)) {
      std::string s = t->mantissa().get_str();
      std::lock_guard lock(mutex_);
      if (s.size() > digit_cache_.size()) digit_cache_ = s;
      return s;
    }
    if (n + extra >= options_.max_digits) {
      throw PrecisionCeilingError("pi digits: precision ceiling reached");
    }
  }
}

Ordering PiOracle::compare(const BigRational& r) {
  for (unsigned digits = 32;; digits *= 2) {
    unsigned d = std::min(digits, options_.max_digits);
    Ordering o = cyclometria::compare(enclosure(d), r);
    // compare(v, r) orders pi against r; flip to order r against pi.
    if (o == Ordering::Less) return Ordering::Greater;
    if (o == Ordering::Greater) return Ordering::Less;
    if (d == options_.max_digits) {
      throw PrecisionCeilingError("cmp_pi: " + r.to_string() + " not separated from pi within the ceiling");
    }
  }
}

Ordering PiOracle::compare(const Enclosure& v) {
  unsigned d = std::min(std::max(v.scale(), 30u) + 2, options_.max_digits);
  return cyclometria::compare(v, enclosure(d));
}

PiOracle& default_pi_oracle() {
  static PiOracle oracle;
  return oracle;
}

Enclosure pi_enclosure(unsigned digits) { return default_pi_oracle().enclosure(digits); }
std::string pi_digits(unsigned n) { return default_pi_oracle().digits(n); }
Ordering cmp_pi(const BigRational& r) { return default_pi_oracle().compare(r); }
Ordering cmp_value_pi(const Enclosure& v) { return default_pi_oracle().compare(v); }

}  // namespace cyclometria
