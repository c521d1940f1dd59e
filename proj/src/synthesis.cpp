#include "cyclometria/synthesis.hpp"

#include <stdexcept>

#include "cyclometria/pi_oracle.hpp"

namespace cyclometria {
namespace {

// Step letters and originator letters in the order of the printed table,
// continued past F/V.
constexpr std::string_view kStepLetters = "CDEFGHIJKLMNOPQRSTUVWXYZ";
constexpr std::string_view kOriginatorLetters = "ZYXVTSRQPONMLKJIHGFEDCBA";

std::string doubled(char c) {
  std::string s(1, c);
  s.push_back(static_cast<char>(c - 'A' + 'a'));
  return s;
}

void label_step(BoundPair& step, std::size_t index) {
  if (index < kStepLetters.size()) {
    step.label_minor = std::string(1, kStepLetters[index]);
    step.label_major = doubled(kStepLetters[index]);
    step.originator_minor_label = std::string(1, kOriginatorLetters[index]);
    step.originator_major_label = doubled(kOriginatorLetters[index]);
  } else {
    std::string n = std::to_string(index + 1);
    step.label_minor = "S" + n;
    step.label_major = "Ss" + n;
    step.originator_minor_label = "G" + n;
    step.originator_major_label = "Gg" + n;
  }
}

RawRatio child(const BigInt& periphery, const BigInt& diameter, const BigInt& n) {
  return RawRatio{diameter * n + 1, periphery * n + 3};
}

}  // namespace

std::string to_string(BoundKind k) { return k == BoundKind::Defective ? "defective" : "excessive"; }

std::vector<LabeledBound> seed_bounds() {
  return {
      {"A", {1, 3}, BoundKind::Defective},
      {"Aa", {1, 4}, BoundKind::Excessive},
      {"B", {8, 25}, BoundKind::Defective},
      {"Bb", {7, 22}, BoundKind::Excessive},
  };
}

BigInt originator(const BigInt& periphery, const BigInt& diameter) {
  if (diameter <= 0) throw std::domain_error("originator: diameter must be positive");
  const BigInt& p = periphery;
  const BigInt& q = diameter;
  if (p <= 3 * q) throw std::domain_error("originator: parent must exceed 3");
  if (cmp_pi(BigRational(p, q)) != Ordering::Greater) {
    throw std::domain_error("originator: parent " + p.get_str() + "/" + q.get_str() + " is not excessive");
  }
  // (pi - 3) / (p - q pi) increases with pi, so the ends of a pi enclosure
  // bracket it. Raise precision until both ends share a floor.
  PiOracle& oracle = default_pi_oracle();
  for (unsigned digits = 32;; digits *= 2) {
    if (digits > oracle.options().max_digits) {
      throw PrecisionCeilingError("originator: floor not resolved within the precision ceiling");
    }
    Enclosure pi = oracle.enclosure(digits);
    BigRational lo = pi.lo().to_rational();
    BigRational hi = pi.hi().to_rational();
    BigRational gap_hi = BigRational(p) - BigRational(q) * hi;
    if (gap_hi.sign() <= 0) continue;
    BigInt f_lo = ((lo - 3) / (BigRational(p) - BigRational(q) * lo)).floor();
    BigInt f_hi = ((hi - 3) / gap_hi).floor();
    if (f_lo != f_hi) continue;
    if (f_lo < 1) throw std::domain_error("originator: no n >= 1 gives a defective child");
    return f_lo;
  }
}

BoundPair refine(const BigInt& periphery, const BigInt& diameter) {
  BoundPair step;
  step.parent = RawRatio{diameter, periphery};
  step.originator_minor = originator(periphery, diameter);
  step.originator_major = step.originator_minor + 1;
  step.defective_raw = child(periphery, diameter, step.originator_minor);
  step.excessive_raw = child(periphery, diameter, step.originator_major);
  if (cmp_pi(step.defective()) != Ordering::Less || cmp_pi(step.excessive()) != Ordering::Greater) {
    throw std::logic_error("refine: children do not bracket pi");
  }
  return step;
}

Chain generate_chain(std::size_t depth) {
  Chain chain;
  chain.seeds = seed_bounds();
  RawRatio parent = chain.seeds.back().raw;
  for (std::size_t i = 0; i < depth; ++i) {
    BoundPair step = refine(parent.periphery, parent.diameter);
    label_step(step, i);
    parent = step.excessive_raw;
    chain.steps.push_back(std::move(step));
  }
  return chain;
}

ReducedForm reduced_form(const RawRatio& raw) {
  return ReducedForm{raw.value(), gcd(raw.periphery, raw.diameter)};
}

CuriousRatioReport curious_ratio() {
  const BigInt whole = 3113;
  const BigInt diameter = 991;
  BigRational value(BigInt(whole * whole + diameter), BigInt(whole * diameter));

  CuriousRatioReport report{value, 0, Enclosure(FixedDecimal()), false};
  constexpr unsigned kCompared = 20;
  std::string ratio_digits = decimal_expand(value, kCompared - 1).mantissa().get_str();
  std::string pi = pi_digits(kCompared);
  while (report.agreeing_digits < kCompared && ratio_digits[report.agreeing_digits] == pi[report.agreeing_digits]) {
    ++report.agreeing_digits;
  }
  report.excess = enclose(value, 40) - pi_enclosure(40);
  BigRational bound(23, pow10(9));
  report.excess_within_bound = report.excess.lo().sign() > 0 && (report.excess.hi() <=> bound) < 0;
  return report;
}

}  // namespace cyclometria
