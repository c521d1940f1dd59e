#include "cyclometria/constructions.hpp"

#include <stdexcept>

#include "cyclometria/pi_oracle.hpp"

namespace cyclometria {
namespace {

const Surd3 kThird = Surd3(0, BigRational(1, 3));  // √3/3 = tan 30°

template <typename Fn>
Ordering decide(Fn&& at_scale) {
  for (unsigned s = 32; s <= default_pi_oracle().options().max_digits; s *= 2) {
    Ordering o = at_scale(s);
    if (o != Ordering::Inconclusive) return o;
  }
  throw PrecisionCeilingError("comparison not resolved within the precision ceiling");
}

}  // namespace

std::vector<LabeledPoint> construction_coordinates() {
  const BigRational half(1, 2);
  return {
      {"A", 0, 0},
      {"B", -1, 0},
      {"C", 0, 1},
      {"D", 1, 0},
      {"E", Surd3(0, -half), half},
      {"F", Surd3(0, half), half},
      {"G", -1, 1},
      {"H", 1, 1},
      {"I", -1, kThird},
      {"K", 1, kThird},
      {"L", 1, 3},
  };
}

const LabeledPoint& point(const std::vector<LabeledPoint>& points, const std::string& label) {
  for (const auto& p : points) {
    if (p.label == label) return p;
  }
  throw std::out_of_range("no construction point labeled " + label);
}

Surd3 squared_distance(const LabeledPoint& p, const LabeledPoint& q) {
  Surd3 dx = q.x - p.x;
  Surd3 dy = q.y - p.y;
  return dx * dx + dy * dy;
}

Enclosure il_enclosure(unsigned scale) {
  auto points = construction_coordinates();
  return sqrt_enclosure(squared_distance(point(points, "I"), point(points, "L")), scale);
}

Enclosure il_tangent_enclosure(unsigned scale) {
  unsigned w = scale + 3;
  FixedDecimal third = decimal_expand(BigRational(1, 3), 2 * w + 2);
  FixedDecimal bi = fd_sqrt(third, w);
  Enclosure tangent(bi, bi + bi.ulp());
  Enclosure kl = BigRational(3) - tangent;
  Enclosure sum = kl * kl + BigRational(4);
  return sqrt(sum.outward(w + 1), w);
}

Enclosure defect_z_enclosure(unsigned scale) {
  return pi_enclosure(scale + 1) - il_enclosure(scale + 1);
}

ConstructionReport kochanski_construction(unsigned scale) {
  if (scale < 15) throw std::invalid_argument("kochanski_construction: scale must be >= 15");
  ConstructionReport report;
  report.scale = scale;
  report.points = construction_coordinates();
  report.closed_form = "(1/3)·sqrt(120 − 18·sqrt(3))";

  const Surd3 kl = Surd3(3) - kThird;
  const Surd3 sum = kl * kl + Surd3(4);
  auto add = [&](const std::string& label, RealEvaluator value) {
    report.named_lengths.push_back(
        {label, certified_truncation(value, scale), certified_rounding(value, scale)});
  };
  add("AB", [](unsigned s) { return Surd3(1).enclose(s); });
  add("BI", [](unsigned s) { return kThird.enclose(s); });
  add("IG", [](unsigned s) { return (Surd3(1) - kThird).enclose(s); });
  add("KL", [&](unsigned s) { return kl.enclose(s); });
  add("KL²+IK²", [&](unsigned s) { return sum.enclose(s); });
  add("IL", [](unsigned s) { return il_enclosure(s); });

  const LabeledPoint& i = point(report.points, "I");
  const LabeledPoint& l = point(report.points, "L");
  report.il_squared = squared_distance(i, l);
  report.identity_holds = report.il_squared == Surd3(BigRational(120, 9), BigRational(-18, 9)) &&
                          report.il_squared == sum;
  report.il = il_enclosure(scale);
  report.il_tangent = il_tangent_enclosure(scale);
  report.defect_z = defect_z_enclosure(scale);
  report.reciprocal_x = certified_floor([](unsigned s) { return reciprocal(defect_z_enclosure(s + 12), s); });
  return report;
}

YearBoundReport year_bound_check(long year) {
  if (year < 1) throw std::invalid_argument("year_bound_check: year must be >= 1");
  YearBoundReport report;
  report.year = year;
  report.lower = BigInt(10) * year;
  report.upper = BigInt(10) * (year + 1);
  report.reciprocal = certified_floor([](unsigned s) { return reciprocal(defect_z_enclosure(s + 12), s); });
  BigRational small(1, report.upper);
  BigRational large(1, report.lower);
  Ordering above_small = decide([&](unsigned s) { return compare(defect_z_enclosure(s), small); });
  Ordering below_large = decide([&](unsigned s) { return compare(defect_z_enclosure(s), large); });
  report.holds = above_small == Ordering::Greater && below_large == Ordering::Less;
  return report;
}

BisectionReport bisection_construction(unsigned scale) {
  if (scale < 9) throw std::invalid_argument("bisection_construction: scale must be >= 9");
  BisectionReport report;
  report.ratio = BigRational(3217, 1024);
  const BigRational part(1, 32);
  report.decomposition = {
      {"three diameters, 96 of 32 parts", BigRational(96) * part},
      {"4/32 of the diameter (1/8)", BigRational(4) * part},
      {"half of one 32nd", BigRational(1, 2) * part},
      {"a sixteenth of the other half 32nd", BigRational(1, 16) * BigRational(1, 2) * part},
  };
  for (const auto& term : report.decomposition) report.decomposition_sum += term.value;
  report.periphery = decimal_expand(report.ratio, scale);
  report.excess_q = enclose(report.ratio, scale + 10) - pi_enclosure(scale + 10);
  Ordering q_vs_z = decide([&](unsigned s) {
    Enclosure q = enclose(report.ratio, s) - pi_enclosure(s);
    return compare(q, defect_z_enclosure(s));
  });
  report.comparison_to_z = q_vs_z == Ordering::Less;
  report.notes = {
      "the printed fraction 8/1 of the diameter stands for 1/8 (= 4/32)",
      "the last particle, 1/1024 of the diameter, is the half of a 32nd divided by 16",
  };
  return report;
}

}  // namespace cyclometria
