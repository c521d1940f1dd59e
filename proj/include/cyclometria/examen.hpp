#pragma once

#include <string>
#include <vector>

#include "cyclometria/enclosure.hpp"
#include "cyclometria/fixed_decimal.hpp"
#include "cyclometria/synthesis.hpp"

namespace cyclometria {

enum class DeviationKind {
  Defect,
  Excess,
  /// No deviation visible at the row scale (the value is pi to within the
  /// available precision).
  Agrees,
};

std::string to_string(DeviationKind k);

/// Diameter of the examination table: 10^25 parts.
inline constexpr unsigned kExamenDiameterExponent = 25;

struct ExamenRow {
  std::string label;
  FixedDecimal periphery_digits;  // truncated expansion at `scale`
  DeviationKind kind;
  FixedDecimal deviation_digits;  // |value - pi|, computed exactly then truncated
  unsigned scale;
};

/// Deviation is taken from the exact value first and then truncated; see
/// truncated_difference() for the other convention.
ExamenRow examine(const BigRational& value, unsigned scale, std::string label = {});

/// For a real given by an evaluator (a radical, pi itself). Precision is
/// raised until the row's digits are certified.
ExamenRow examine(const RealEvaluator& value, unsigned scale, std::string label = {});

/// |trunc(value) - trunc(pi)| at the row scale: the deviation one gets by
/// subtracting the printed rows digit by digit.
FixedDecimal truncated_difference(const ExamenRow& row);

/// Visible digit counts per row pair of the printed table: B/Bb 10, C/Cc 15,
/// D/Dd and E/Ee 20, F/Ff 25. Deeper rows use the table's full 25.
unsigned printed_row_scale(std::size_t pair_index);

struct ExamenTable {
  unsigned scale;           // diameter exponent
  FixedDecimal diameter;    // 1 at `scale`
  FixedDecimal archimedes;  // pi truncated at `scale`
  std::vector<ExamenRow> rows;
};

/// Rows B, Bb, then each step's defective/excessive bound, at
/// min(printed_row_scale, scale). Throws std::invalid_argument when scale < 1.
ExamenTable examen_table(const Chain& chain, unsigned scale = kExamenDiameterExponent);

/// Printed-layout text: five-digit cells, the Archimedes header, one periphery
/// line and one deviation line per row.
std::string render_examen(const ExamenTable& table);
std::string render_examen(const Chain& chain, unsigned scale = kExamenDiameterExponent);

}  // namespace cyclometria
