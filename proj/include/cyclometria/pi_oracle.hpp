#pragma once

#include <mutex>
#include <optional>
#include <string>

#include "cyclometria/enclosure.hpp"
#include "cyclometria/rational.hpp"

namespace cyclometria {

struct PiOracleOptions {
  /// Hard ceiling on working precision, in decimal digits.
  unsigned max_digits = 10000;
};

/// Rigorous enclosures of pi from Machin's formula
///   pi = 16 atan(1/5) - 4 atan(1/239),
/// with every series truncation bounded analytically (see pi_oracle.cpp).
///
/// Thread-safe. The cached enclosure only ever shrinks (each new result is
/// intersected with it), so enclosures and digit prefixes handed out at
/// different times never contradict each other.
class PiOracle {
 public:
  explicit PiOracle(PiOracleOptions options = {}) : options_(options) {}

  /// lo < pi < hi with hi - lo <= 10^-digits.
  Enclosure enclosure(unsigned digits);

  /// First n significant digits of pi, truncated ("3", "31", "314", ...).
  std::string digits(unsigned n);

  /// Order of r against pi, doubling precision until decided. Never returns
  /// Inconclusive; throws PrecisionCeilingError at the ceiling.
  Ordering compare(const BigRational& r);

  /// Order of the enclosed value against pi at matching precision;
  /// Inconclusive when the intervals overlap.
  Ordering compare(const Enclosure& v);

  const PiOracleOptions& options() const { return options_; }

 private:
  PiOracleOptions options_;
  std::mutex mutex_;
  std::optional<Enclosure> cache_;
  std::string digit_cache_;
};

/// Machin enclosure at a fixed working precision: scale `working_digits`,
/// width bounded by the series error analysis. Exposed for tests.
Enclosure machin_pi(unsigned working_digits);

PiOracle& default_pi_oracle();

Enclosure pi_enclosure(unsigned digits);
std::string pi_digits(unsigned n);
/// Less iff r < pi.
Ordering cmp_pi(const BigRational& r);
Ordering cmp_value_pi(const Enclosure& v);

}  // namespace cyclometria
