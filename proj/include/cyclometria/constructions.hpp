#pragma once

#include <string>
#include <vector>

#include "cyclometria/enclosure.hpp"
#include "cyclometria/fixed_decimal.hpp"
#include "cyclometria/surd.hpp"

namespace cyclometria {

/// Exact point with coordinates in Q(sqrt 3).
struct LabeledPoint {
  std::string label;
  Surd3 x;
  Surd3 y;
};

/// Unit radius, centre A at the origin, diameter BD horizontal:
/// A(0,0) B(-1,0) D(1,0) C(0,1) G(-1,1) H(1,1) E(-√3/2,1/2) F(√3/2,1/2)
/// I(-1,√3/3) K(1,√3/3) L(1,3).
///
/// L sits on the tangent at D beyond H with HL equal to the diameter; that
/// is the placement for which IL^2 = 4 + (3 - √3/3)^2.
std::vector<LabeledPoint> construction_coordinates();

const LabeledPoint& point(const std::vector<LabeledPoint>& points, const std::string& label);

Surd3 squared_distance(const LabeledPoint& p, const LabeledPoint& q);

struct NamedLength {
  std::string label;
  FixedDecimal truncated;
  FixedDecimal rounded;
};

struct ConstructionReport {
  unsigned scale;
  /// AB, BI, IG, KL, KL²+IK², IL at `scale`.
  std::vector<NamedLength> named_lengths;
  std::string closed_form;
  Surd3 il_squared;       // from the coordinates of I and L
  bool identity_holds;    // il_squared == (120 - 18√3) / 9
  Enclosure il;           // coordinate route
  Enclosure il_tangent;   // decimal route through tan 30° and fd_sqrt
  Enclosure defect_z;     // pi - IL
  BigInt reciprocal_x;    // floor(1 / Z)
  std::vector<LabeledPoint> points;
};

/// IL at any scale, from the coordinates.
Enclosure il_enclosure(unsigned scale);

/// IL by the printed calculation: BI = tan 30° = fd_sqrt(1/3), IG = 1 - BI,
/// KL = 2 + IG, IL = fd_sqrt(KL² + IK²), each truncation tracked as
/// an interval.
Enclosure il_tangent_enclosure(unsigned scale);

/// pi - IL.
Enclosure defect_z_enclosure(unsigned scale);

/// Throws std::invalid_argument for scale < 15.
ConstructionReport kochanski_construction(unsigned scale = 15);

struct YearBoundReport {
  long year;
  BigInt lower;        // 10 * year
  BigInt upper;        // 10 * (year + 1)
  BigInt reciprocal;   // floor(1 / Z)
  bool holds;          // 1/upper < Z < 1/lower
};

/// Throws std::invalid_argument for year < 1.
YearBoundReport year_bound_check(long year);

struct DyadicTerm {
  std::string description;
  BigRational value;
};

struct BisectionReport {
  BigRational ratio;                     // 3217 / 1024
  std::vector<DyadicTerm> decomposition;
  BigRational decomposition_sum;
  FixedDecimal periphery;                // ratio truncated at `scale`
  Enclosure excess_q;                    // ratio - pi
  bool comparison_to_z;                  // Q < Z, by enclosure separation
  std::vector<std::string> notes;
};

/// Throws std::invalid_argument for scale < 9.
BisectionReport bisection_construction(unsigned scale = 9);

}  // namespace cyclometria
