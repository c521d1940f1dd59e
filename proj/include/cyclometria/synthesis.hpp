#pragma once

#include <string>
#include <vector>

#include "cyclometria/enclosure.hpp"
#include "cyclometria/rational.hpp"

namespace cyclometria {

enum class BoundKind { Defective, Excessive };

std::string to_string(BoundKind k);

/// Diameter : periphery exactly as printed, not reduced. The recurrence is
/// sensitive to the representation, so the raw pair is what gets refined.
struct RawRatio {
  BigInt diameter;
  BigInt periphery;

  BigRational value() const { return BigRational(periphery, diameter); }
  friend bool operator==(const RawRatio&, const RawRatio&) = default;
};

struct LabeledBound {
  std::string label;
  RawRatio raw;
  BoundKind kind;
};

/// One refinement: parent p/q (excessive) and originators n, n+1 give
///   defective (p n + 3) / (q n + 1),  excessive (p (n+1) + 3) / (q (n+1) + 1).
struct BoundPair {
  std::string label_minor;       // "C"
  std::string label_major;       // "Cc"
  std::string originator_minor_label;  // "Z"
  std::string originator_major_label;  // "Zz"
  RawRatio parent;
  BigInt originator_minor;
  BigInt originator_major;
  RawRatio defective_raw;
  RawRatio excessive_raw;

  BigRational defective() const { return defective_raw.value(); }
  BigRational excessive() const { return excessive_raw.value(); }
};

/// Seeds A = 3/1, Aa = 4/1, B = 25/8, Bb = 22/7, then refinement steps. Each
/// step refines the previous step's excessive raw pair, the first one Bb.
struct Chain {
  std::vector<LabeledBound> seeds;
  std::vector<BoundPair> steps;
};

/// The seed constants A, Aa, B, Bb. B coincides with the n = 1 instance of
/// the recurrence on Bb, (22 + 3) / (7 + 1), but is taken as given.
std::vector<LabeledBound> seed_bounds();

/// n* = max { n >= 1 : (p n + 3) / (q n + 1) < pi } = floor((pi - 3) / (p - q pi)).
/// p is the periphery, q the diameter. Throws std::domain_error unless
/// p/q > pi, or when no n >= 1 exists.
BigInt originator(const BigInt& periphery, const BigInt& diameter);

/// Both children of p/q, checked against pi. Labels are left empty.
BoundPair refine(const BigInt& periphery, const BigInt& diameter);

/// Seeds plus `depth` steps, labeled C/Cc..F/Ff with originators Z/Zz..V/Vv
/// and continuing the letter sequences beyond that.
Chain generate_chain(std::size_t depth);

struct ReducedForm {
  BigRational value;
  BigInt factor;  // common factor removed from the raw pair
};

ReducedForm reduced_form(const RawRatio& raw);

struct CuriousRatioReport {
  BigRational value;          // 9691760 / 3084983
  unsigned agreeing_digits;   // leading significant digits shared with pi
  Enclosure excess;           // value - pi
  bool excess_within_bound;   // 0 < value - pi < 23 * 10^-9
};

/// 991 : 3113 991/3113, i.e. (3113^2 + 991) / (3113 * 991).
CuriousRatioReport curious_ratio();

}  // namespace cyclometria
