#include "cyclometria/report.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "cyclometria/audit.hpp"
#include "cyclometria/constructions.hpp"
#include "cyclometria/continued_fraction.hpp"
#include "cyclometria/examen.hpp"
#include "cyclometria/pi_oracle.hpp"
#include "cyclometria/synthesis.hpp"

namespace cyclometria {

using nlohmann::json;

std::string serialize(const ReportEnvelope& e) {
  json params = json::array();
  for (const auto& [name, value] : e.parameters) params.push_back({{"name", name}, {"value", value}});
  json j = {{"schema", e.schema},
            {"command", e.command},
            {"parameters", params},
            {"produced_at", e.produced_at ? json(*e.produced_at) : json(nullptr)},
            {"corpus_version", e.corpus_version},
            {"body", e.body}};
  return j.dump(2) + "\n";
}

ReportEnvelope parse_envelope(const std::string& text) {
  try {
    json j = json::parse(text);
    ReportEnvelope e;
    e.schema = j.at("schema").get<std::string>();
    e.command = j.at("command").get<std::string>();
    for (const auto& p : j.at("parameters")) {
      e.parameters.emplace_back(p.at("name").get<std::string>(), p.at("value").get<std::string>());
    }
    if (!j.at("produced_at").is_null()) e.produced_at = j.at("produced_at").get<std::string>();
    e.corpus_version = j.at("corpus_version").get<std::string>();
    e.body = j.at("body");
    return e;
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("malformed report envelope: ") + ex.what());
  }
}

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "records") return OutputFormat::Records;
  if (name == "table") return OutputFormat::Table;
  throw std::invalid_argument("unsupported format '" + name + "' (expected text, records or table)");
}

namespace {

std::string utc_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

ReportEnvelope envelope(std::string command, std::vector<std::pair<std::string, std::string>> parameters,
                        const ReportOptions& options) {
  ReportEnvelope e;
  e.command = std::move(command);
  e.parameters = std::move(parameters);
  if (!options.deterministic) e.produced_at = utc_now();
  return e;
}

json enclosure_json(const Enclosure& e) { return {{"lo", e.lo().to_string()}, {"hi", e.hi().to_string()}}; }

json raw_json(const RawRatio& raw) {
  return {{"diameter", raw.diameter.get_str()}, {"periphery", raw.periphery.get_str()}};
}

json bound_json(const std::string& label, const RawRatio& raw, BoundKind kind) {
  json j = raw_json(raw);
  j["label"] = label;
  j["kind"] = to_string(kind);
  return j;
}

json surd_json(const Surd3& s) {
  return {{"rational", s.rational_part().to_string()}, {"sqrt3", s.surd_part().to_string()}};
}

json examen_row_json(const ExamenRow& row) {
  return {{"label", row.label},
          {"periphery", row.periphery_digits.to_string()},
          {"kind", to_string(row.kind)},
          {"deviation", row.deviation_digits.to_string()},
          {"scale", row.scale}};
}

std::string ratio_list(const std::vector<BigRational>& rs) {
  std::string out;
  for (const auto& r : rs) out += (out.empty() ? "" : ",") + r.to_string();
  return out;
}

}  // namespace

ReportEnvelope pi_report(unsigned digits, const std::vector<BigRational>& compare, const ReportOptions& options) {
  if (digits < 1) throw std::invalid_argument("pi: --digits must be >= 1");
  ReportEnvelope e = envelope("pi", {{"digits", std::to_string(digits)}, {"compare", ratio_list(compare)}}, options);
  std::string value = pi_digits(digits + 1).insert(1, ".");
  e.body = {{"digits", digits}, {"value", value}, {"enclosure", enclosure_json(pi_enclosure(digits))}};
  json comparisons = json::array();
  for (const auto& r : compare) {
    comparisons.push_back({{"ratio", r.to_string()}, {"order", to_string(cmp_pi(r))}});
  }
  e.body["comparisons"] = comparisons;
  return e;
}

ReportEnvelope chain_report(std::size_t depth, const ReportOptions& options) {
  ReportEnvelope e = envelope("chain", {{"depth", std::to_string(depth)}}, options);
  Chain chain = generate_chain(depth);
  json seeds = json::array();
  json steps = json::array();
  json reduced = json::array();
  auto add_reduced = [&](const std::string& label, const RawRatio& raw) {
    ReducedForm r = reduced_form(raw);
    reduced.push_back({{"source", label},
                       {"diameter", r.value.den().get_str()},
                       {"periphery", r.value.num().get_str()},
                       {"factor", r.factor.get_str()}});
  };
  for (const auto& s : chain.seeds) {
    seeds.push_back(bound_json(s.label, s.raw, s.kind));
    add_reduced(s.label, s.raw);
  }
  for (const auto& s : chain.steps) {
    steps.push_back({{"parent", raw_json(s.parent)},
                     {"originator_minor", {{"label", s.originator_minor_label}, {"value", s.originator_minor.get_str()}}},
                     {"originator_major", {{"label", s.originator_major_label}, {"value", s.originator_major.get_str()}}},
                     {"defective", bound_json(s.label_minor, s.defective_raw, BoundKind::Defective)},
                     {"excessive", bound_json(s.label_major, s.excessive_raw, BoundKind::Excessive)}});
    add_reduced(s.label_minor, s.defective_raw);
    add_reduced(s.label_major, s.excessive_raw);
  }
  CuriousRatioReport cr = curious_ratio();
  e.body = {{"depth", depth},
            {"seeds", seeds},
            {"steps", steps},
            {"reduced_forms", reduced},
            {"curious_ratio",
             {{"value", cr.value.to_string()},
              {"agreeing_digits", cr.agreeing_digits},
              {"excess", enclosure_json(cr.excess.outward(15))},
              {"excess_below_23e-9", cr.excess_within_bound}}}};
  return e;
}

ReportEnvelope examen_report(std::size_t depth, unsigned scale, const ReportOptions& options) {
  ReportEnvelope e =
      envelope("examen", {{"depth", std::to_string(depth)}, {"scale", std::to_string(scale)}}, options);
  ExamenTable table = examen_table(generate_chain(depth), scale);
  json rows = json::array();
  for (const auto& row : table.rows) rows.push_back(examen_row_json(row));
  e.body = {{"scale", scale},
            {"diameter", table.diameter.to_string()},
            {"archimedes", table.archimedes.to_string()},
            {"rows", rows}};
  return e;
}

ReportEnvelope audit_report(const ReportOptions& options) {
  std::string path = options.corpus_path.empty() ? default_corpus_path() : options.corpus_path;
  // The path is machine-specific; it stays out of deterministic output.
  ReportEnvelope e = envelope("audit", {{"corpus", options.deterministic ? "" : path}}, options);
  AuditReport report = audit_corpus(load_corpus(path));
  e.corpus_version = report.corpus_version;
  json findings = json::array();
  for (const auto& f : report.findings) {
    findings.push_back({{"location", f.location},
                        {"printed", f.printed},
                        {"computed", f.computed},
                        {"classification", to_string(f.classification)},
                        {"convention", f.convention},
                        {"note", f.note}});
  }
  json counts = json::object();
  for (const auto& [c, n] : report.counts) counts[to_string(c)] = n;
  e.body = {{"findings", findings}, {"counts", counts}, {"total", report.findings.size()}};
  return e;
}

ReportEnvelope kochanski_report(unsigned scale, long year, const ReportOptions& options) {
  ReportEnvelope e = envelope("construct kochanski",
                              {{"scale", std::to_string(scale)}, {"year", std::to_string(year)}}, options);
  ConstructionReport k = kochanski_construction(scale);
  YearBoundReport y = year_bound_check(year);
  json lengths = json::array();
  for (const auto& l : k.named_lengths) {
    lengths.push_back({{"label", l.label}, {"truncated", l.truncated.to_string()}, {"rounded", l.rounded.to_string()}});
  }
  json points = json::array();
  for (const auto& p : k.points) {
    points.push_back({{"label", p.label},
                      {"x", surd_json(p.x)},
                      {"y", surd_json(p.y)},
                      {"x_decimal", certified_truncation([&](unsigned s) { return p.x.enclose(s); }, 12).to_string()},
                      {"y_decimal", certified_truncation([&](unsigned s) { return p.y.enclose(s); }, 12).to_string()}});
  }
  e.body = {{"scale", scale},
            {"named_lengths", lengths},
            {"closed_form", k.closed_form},
            {"il_squared", surd_json(k.il_squared)},
            {"identity_holds", k.identity_holds},
            {"il", enclosure_json(k.il)},
            {"il_tangent_route", enclosure_json(k.il_tangent)},
            {"il_against_pi", to_string(cmp_value_pi(k.il))},
            {"defect_z", enclosure_json(k.defect_z)},
            {"reciprocal_x", k.reciprocal_x.get_str()},
            {"year_check",
             {{"year", year}, {"lower", y.lower.get_str()}, {"upper", y.upper.get_str()}, {"holds", y.holds}}},
            {"points", points}};
  return e;
}

ReportEnvelope bisection_report(unsigned scale, const ReportOptions& options) {
  ReportEnvelope e = envelope("construct bisection", {{"scale", std::to_string(scale)}}, options);
  BisectionReport b = bisection_construction(scale);
  json terms = json::array();
  for (const auto& t : b.decomposition) terms.push_back({{"description", t.description}, {"value", t.value.to_string()}});
  e.body = {{"scale", scale},
            {"ratio", b.ratio.to_string()},
            {"decomposition", terms},
            {"decomposition_sum", b.decomposition_sum.to_string()},
            {"periphery", b.periphery.to_string()},
            {"excess_q", enclosure_json(b.excess_q.outward(scale + 4))},
            {"q_less_than_z", b.comparison_to_z},
            {"notes", b.notes}};
  return e;
}

ReportEnvelope cf_report(std::size_t terms, const std::vector<BigRational>& classify, const ReportOptions& options) {
  ReportEnvelope e =
      envelope("cf", {{"terms", std::to_string(terms)}, {"classify", ratio_list(classify)}}, options);
  CFExpansion cf = pi_continued_fraction(terms);
  json t = json::array();
  json c = json::array();
  for (const auto& a : cf.terms) t.push_back(a.get_str());
  for (const auto& r : cf.convergents) c.push_back(r.to_string());
  json classes = json::array();
  for (const auto& r : classify) {
    classes.push_back({{"ratio", r.to_string()}, {"class", to_string(classify_bound(r, cf))}});
  }
  e.body = {{"terms", t}, {"convergents", c}, {"classifications", classes}};
  return e;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

using Rows = std::vector<std::vector<std::string>>;

std::string str(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string grouped(const std::string& decimal) { return format_grouped(parse_grouped(decimal)); }

std::string pad(std::string s, std::size_t width) {
  // Width in code points, so the dagger and dash line up.
  std::size_t cps = 0;
  for (unsigned char c : s) cps += (c & 0xC0) != 0x80;
  if (cps < width) s.append(width - cps, ' ');
  return s;
}

std::string mark(const json& bound) { return str(bound.at("kind")) == "defective" ? "†" : "—"; }

std::string ratio_cell(const json& bound) {
  return str(bound.at("diameter")) + " ad " + str(bound.at("periphery"));
}

std::string text_pi(const json& b) {
  std::string out = str(b.at("value")) + "\n";
  for (const auto& c : b.at("comparisons")) {
    out += str(c.at("ratio")) + " " + (str(c.at("order")) == "Less" ? "<" : ">") + " pi\n";
  }
  return out;
}

std::string text_chain(const json& b) {
  std::string out = "DIAMETRI AD PERIPHERIAM CIRCULI -- Rationes Arithmeticae\n";
  out += pad("", 5) + pad("Defectivae", 38) + pad("", 5) + "Excessivae\n";
  const json seeds = b.value("seeds", json::array());
  auto pair_line = [&](const json& minor, const json& major) {
    return pad(str(minor.at("label")), 5) + pad(ratio_cell(minor), 36) + mark(minor) + " " +
           pad(str(major.at("label")), 5) + pad(ratio_cell(major), 36) + mark(major) + "\n";
  };
  for (std::size_t i = 0; i + 1 < seeds.size(); i += 2) out += pair_line(seeds[i], seeds[i + 1]);
  for (const auto& s : b.value("steps", json::array())) {
    const json& lo = s.at("originator_minor");
    const json& hi = s.at("originator_major");
    out += pad(str(lo.at("label")), 5) + pad("1 .... " + str(lo.at("value")) + " .... 3", 38) +
           pad(str(hi.at("label")), 5) + "1 .... " + str(hi.at("value")) + " .... 3\n";
    out += pair_line(s.at("defective"), s.at("excessive"));
  }
  bool header = false;
  for (const auto& r : b.value("reduced_forms", json::array())) {
    if (str(r.at("factor")) == "1") continue;
    if (!header) out += "\nHarum quaedam minoribus terminis\n";
    header = true;
    out += pad(str(r.at("source")), 5) + pad(str(r.at("diameter")) + " ad " + str(r.at("periphery")), 36) +
           "(common factor " + str(r.at("factor")) + ")\n";
  }
  if (b.contains("curious_ratio")) {
    const json& c = b.at("curious_ratio");
    out += "\nCurious ratio " + str(c.at("value")) + ": agrees with pi in " + str(c.at("agreeing_digits")) +
           " digits, excess in " + "[" + str(c.at("excess").at("lo")) + ", " + str(c.at("excess").at("hi")) + "]" +
           (c.at("excess_below_23e-9").get<bool>() ? ", below 23e-9\n" : ", NOT below 23e-9\n");
  }
  return out;
}

ExamenTable table_from(const json& b) {
  ExamenTable t;
  t.scale = b.at("scale").get<unsigned>();
  t.diameter = FixedDecimal::parse(str(b.at("diameter")));
  t.archimedes = FixedDecimal::parse(str(b.at("archimedes")));
  for (const auto& r : b.at("rows")) {
    std::string kind = str(r.at("kind"));
    t.rows.push_back({str(r.at("label")), FixedDecimal::parse(str(r.at("periphery"))),
                      kind == "Defectus" ? DeviationKind::Defect
                                         : (kind == "Excessus" ? DeviationKind::Excess : DeviationKind::Agrees),
                      FixedDecimal::parse(str(r.at("deviation"))), r.at("scale").get<unsigned>()});
  }
  return t;
}

std::string text_audit(const json& b) {
  std::string out;
  for (const auto& f : b.at("findings")) {
    out += pad(str(f.at("location")), 22) + pad(str(f.at("classification")), 20) + "printed " +
           str(f.at("printed")) + " | computed " + str(f.at("computed"));
    if (!str(f.at("convention")).empty()) out += " | " + str(f.at("convention"));
    out += "\n";
  }
  out += "\n" + str(b.at("total")) + " entries:";
  for (const auto& [name, n] : b.at("counts").items()) out += " " + name + "=" + str(n);
  return out + "\n";
}

std::string text_kochanski(const json& b) {
  std::string out = "Semicircle construction, radius AB = 1, to " + str(b.at("scale")) + " places\n";
  for (const auto& l : b.at("named_lengths")) {
    out += pad(str(l.at("label")) + ".", 10) + pad(grouped(str(l.at("truncated"))), 48) + "rounded " +
           grouped(str(l.at("rounded"))) + "\n";
  }
  out += "IL = " + str(b.at("closed_form")) + "\n";
  Surd3 il2(BigRational::parse(str(b.at("il_squared").at("rational"))),
            BigRational::parse(str(b.at("il_squared").at("sqrt3"))));
  out += "IL² = " + il2.to_string() + ", identity IL² = (120 − 18√3)/9 " + (b.at("identity_holds").get<bool>() ? "holds" : "FAILS") + "\n";
  out += "Z = pi − IL in [" + str(b.at("defect_z").at("lo")) + ", " + str(b.at("defect_z").at("hi")) + "]\n";
  out += "X = " + str(b.at("reciprocal_x")) + "\n";
  const json& y = b.at("year_check");
  out += "year " + str(y.at("year")) + ": 1/" + str(y.at("upper")) + " < Z < 1/" + str(y.at("lower")) + " " +
         (y.at("holds").get<bool>() ? "PASS" : "FAIL") + "\n";
  return out;
}

std::string text_bisection(const json& b) {
  std::string out = "Bisection construction: periphery " + str(b.at("ratio")) + " of the diameter\n";
  for (const auto& t : b.at("decomposition")) out += "  + " + pad(str(t.at("value")), 8) + str(t.at("description")) + "\n";
  out += "  = " + str(b.at("decomposition_sum")) + "\n";
  out += "P = " + grouped(str(b.at("periphery"))) + "\n";
  out += "Q = P − pi in [" + str(b.at("excess_q").at("lo")) + ", " + str(b.at("excess_q").at("hi")) + "]\n";
  out += std::string("Q < Z: ") + (b.at("q_less_than_z").get<bool>() ? "yes" : "no") + "\n";
  for (const auto& n : b.at("notes")) out += "note: " + str(n) + "\n";
  return out;
}

std::string text_cf(const json& b) {
  std::string out = "pi = [";
  const json& terms = b.at("terms");
  for (std::size_t k = 0; k < terms.size(); ++k) out += (k == 0 ? "" : (k == 1 ? "; " : ", ")) + str(terms[k]);
  out += "]\n";
  for (const auto& c : b.at("convergents")) out += "  " + str(c) + "\n";
  for (const auto& c : b.at("classifications")) out += str(c.at("ratio")) + ": " + str(c.at("class")) + "\n";
  return out;
}

Rows table_rows(const ReportEnvelope& e) {
  const json& b = e.body;
  Rows rows;
  if (e.command == "pi") {
    rows.push_back({"digits", "value", "lo", "hi"});
    rows.push_back({str(b.at("digits")), str(b.at("value")), str(b.at("enclosure").at("lo")),
                    str(b.at("enclosure").at("hi"))});
  } else if (e.command == "chain") {
    rows.push_back({"label", "kind", "diameter", "periphery", "originator"});
    for (const auto& s : b.value("seeds", json::array())) {
      rows.push_back({str(s.at("label")), str(s.at("kind")), str(s.at("diameter")), str(s.at("periphery")), ""});
    }
    for (const auto& s : b.value("steps", json::array())) {
      for (const char* side : {"defective", "excessive"}) {
        const json& bound = s.at(side);
        const json& o = s.at(std::string(side) == "defective" ? "originator_minor" : "originator_major");
        rows.push_back({str(bound.at("label")), str(bound.at("kind")), str(bound.at("diameter")),
                        str(bound.at("periphery")), str(o.at("value"))});
      }
    }
  } else if (e.command == "examen") {
    rows.push_back({"label", "scale", "periphery", "kind", "deviation"});
    for (const auto& r : b.at("rows")) {
      rows.push_back({str(r.at("label")), str(r.at("scale")), str(r.at("periphery")), str(r.at("kind")),
                      str(r.at("deviation"))});
    }
  } else if (e.command == "audit") {
    rows.push_back({"location", "classification", "printed", "computed", "convention"});
    for (const auto& f : b.at("findings")) {
      rows.push_back({str(f.at("location")), str(f.at("classification")), str(f.at("printed")),
                      str(f.at("computed")), str(f.at("convention"))});
    }
  } else if (e.command == "construct kochanski") {
    rows.push_back({"label", "truncated", "rounded"});
    for (const auto& l : b.at("named_lengths")) {
      rows.push_back({str(l.at("label")), str(l.at("truncated")), str(l.at("rounded"))});
    }
    rows.push_back({"X", str(b.at("reciprocal_x")), str(b.at("reciprocal_x"))});
  } else if (e.command == "construct bisection") {
    rows.push_back({"term", "value"});
    for (const auto& t : b.at("decomposition")) rows.push_back({str(t.at("description")), str(t.at("value"))});
    rows.push_back({"sum", str(b.at("decomposition_sum"))});
  } else if (e.command == "cf") {
    rows.push_back({"k", "term", "convergent"});
    for (std::size_t k = 0; k < b.at("terms").size(); ++k) {
      rows.push_back({std::to_string(k), str(b.at("terms")[k]), str(b.at("convergents")[k])});
    }
  } else {
    throw std::invalid_argument("no table layout for command '" + e.command + "'");
  }
  return rows;
}

}  // namespace

std::string emit(const ReportEnvelope& e, OutputFormat format) {
  switch (format) {
    case OutputFormat::Records:
      return serialize(e);
    case OutputFormat::Table: {
      std::string out;
      for (const auto& row : table_rows(e)) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "\t" : "") + row[i];
        out += "\n";
      }
      return out;
    }
    case OutputFormat::Text:
      break;
  }
  const json& b = e.body;
  if (e.command == "pi") return text_pi(b);
  if (e.command == "chain") return text_chain(b);
  if (e.command == "examen") return render_examen(table_from(b));
  if (e.command == "audit") return text_audit(b);
  if (e.command == "construct kochanski") return text_kochanski(b);
  if (e.command == "construct bisection") return text_bisection(b);
  if (e.command == "cf") return text_cf(b);
  throw std::invalid_argument("no text layout for command '" + e.command + "'");
}

}  // namespace cyclometria
