#include "cyclometria/examen.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cyclometria/pi_oracle.hpp"

namespace cyclometria {

std::string to_string(DeviationKind k) {
  switch (k) {
    case DeviationKind::Defect: return "Defectus";
    case DeviationKind::Excess: return "Excessus";
    case DeviationKind::Agrees: return "Agrees";
  }
  return "?";
}

ExamenRow examine(const BigRational& value, unsigned scale, std::string label) {
  if (scale < 1) throw std::invalid_argument("examine: scale must be >= 1");
  ExamenRow row;
  row.label = std::move(label);
  row.scale = scale;
  row.periphery_digits = decimal_expand(value, scale);
  row.kind = cmp_pi(value) == Ordering::Less ? DeviationKind::Defect : DeviationKind::Excess;
  RealEvaluator deviation = [&](unsigned s) {
    Enclosure d = value - pi_enclosure(s);
    return row.kind == DeviationKind::Defect ? -d : d;
  };
  row.deviation_digits = certified_truncation(deviation, scale);
  return row;
}

ExamenRow examine(const RealEvaluator& value, unsigned scale, std::string label) {
  if (scale < 1) throw std::invalid_argument("examine: scale must be >= 1");
  ExamenRow row;
  row.label = std::move(label);
  row.scale = scale;
  row.periphery_digits = certified_truncation(value, scale);
  // Look for a sign of value - pi that is resolvable well past the row scale;
  // if none shows up the row reports no deviation.
  row.kind = DeviationKind::Agrees;
  for (unsigned s = std::max(scale + 4, 32u); s <= 4 * scale + 64; s *= 2) {
    Ordering o = compare(value(s), pi_enclosure(s));
    if (o == Ordering::Less) row.kind = DeviationKind::Defect;
    if (o == Ordering::Greater) row.kind = DeviationKind::Excess;
    if (o != Ordering::Inconclusive) break;
  }
  if (row.kind == DeviationKind::Agrees) {
    row.deviation_digits = FixedDecimal(0, scale);
    return row;
  }
  bool defect = row.kind == DeviationKind::Defect;
  RealEvaluator deviation = [&](unsigned s) {
    Enclosure d = value(s) - pi_enclosure(s);
    return defect ? -d : d;
  };
  row.deviation_digits = certified_truncation(deviation, scale);
  return row;
}

FixedDecimal truncated_difference(const ExamenRow& row) {
  FixedDecimal pi = FixedDecimal::parse(pi_digits(row.scale + 1).insert(1, "."));
  FixedDecimal d = row.periphery_digits - pi;
  return d.sign() < 0 ? -d : d;
}

unsigned printed_row_scale(std::size_t pair_index) {
  static constexpr unsigned kScales[] = {10, 15, 20, 20, 25};
  return pair_index < std::size(kScales) ? kScales[pair_index] : kExamenDiameterExponent;
}

ExamenTable examen_table(const Chain& chain, unsigned scale) {
  if (scale < 1) throw std::invalid_argument("examen_table: scale must be >= 1");
  ExamenTable table;
  table.scale = scale;
  table.diameter = FixedDecimal(pow10(scale), scale);
  table.archimedes = FixedDecimal::parse(pi_digits(scale + 1).insert(1, "."));

  auto seed = [&](const std::string& label) -> const LabeledBound* {
    for (const auto& s : chain.seeds) {
      if (s.label == label) return &s;
    }
    return nullptr;
  };
  unsigned seed_scale = std::min(printed_row_scale(0), scale);
  for (const char* label : {"B", "Bb"}) {
    if (const LabeledBound* s = seed(label)) table.rows.push_back(examine(s->raw.value(), seed_scale, s->label));
  }
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const BoundPair& step = chain.steps[i];
    unsigned s = std::min(printed_row_scale(i + 1), scale);
    table.rows.push_back(examine(step.defective(), s, step.label_minor));
    table.rows.push_back(examine(step.excessive(), s, step.label_major));
  }
  return table;
}

namespace {

// Cells right-aligned in the table's columns: 6 wide for the first, 5 after.
std::string column_line(const std::string& head, const std::vector<std::string>& cells, std::size_t columns,
                        const std::string& tail) {
  std::ostringstream out;
  out << head;
  for (std::size_t c = 0; c < columns; ++c) {
    std::string cell = c < cells.size() ? cells[c] : "";
    std::size_t width = c == 0 ? 6 : 5;
    out << " " << std::string(width > cell.size() ? width - cell.size() : 0, ' ') << cell;
  }
  if (!tail.empty()) out << "  " << tail;
  std::string line = out.str();
  line.erase(line.find_last_not_of(' ') + 1);
  return line + "\n";
}

std::string pad_label(std::string label) {
  if (!label.empty()) label += ".";
  label.resize(std::max<std::size_t>(label.size(), 8), ' ');
  return label;
}

}  // namespace

std::string render_examen(const ExamenTable& table) {
  std::size_t columns = (table.scale + 4) / 5;
  std::string out = "Examen Rationum Cyclometricarum\n";
  out += column_line(pad_label("Diam"), table_cells(table.diameter), columns, "Archimedis");
  out += column_line(pad_label("Periph"), table_cells(table.archimedes), columns, "-- Ratio.");
  for (const auto& row : table.rows) {
    out += column_line(pad_label(row.label), table_cells(row.periphery_digits), columns, "");
    out += column_line(pad_label(""), table_cells(row.deviation_digits), columns, to_string(row.kind));
  }
  return out;
}

std::string render_examen(const Chain& chain, unsigned scale) { return render_examen(examen_table(chain, scale)); }

}  // namespace cyclometria
