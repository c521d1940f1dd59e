#include "cyclometria/audit.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "cyclometria/constructions.hpp"
#include "cyclometria/examen.hpp"
#include "cyclometria/pi_oracle.hpp"
#include "cyclometria/synthesis.hpp"

#ifndef CYCLOMETRIA_DEFAULT_CORPUS
#define CYCLOMETRIA_DEFAULT_CORPUS "data/cyclometric_corpus.txt"
#endif

namespace cyclometria {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Confirmed: return "Confirmed";
    case Classification::PaperMisprint: return "PaperMisprint";
    case Classification::TranslatorMisprint: return "TranslatorMisprint";
    case Classification::ConventionAmbiguity: return "ConventionAmbiguity";
  }
  return "?";
}

CorpusError::CorpusError(std::string source, std::size_t line, std::string field, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": field '" + field + "': " + message),
      source_(std::move(source)),
      line_(line),
      field_(std::move(field)) {}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Corpus parse_corpus(std::istream& in, const std::string& source) {
  Corpus corpus;
  corpus.source = source;
  std::string line;
  std::size_t number = 0;
  constexpr std::string_view kVersion = "# corpus-version:";
  while (std::getline(in, line)) {
    ++number;
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t.rfind(kVersion, 0) == 0) {
      corpus.version = trim(std::string_view(t).substr(kVersion.size()));
      continue;
    }
    if (t[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      auto bar = t.find('|', start);
      fields.push_back(trim(std::string_view(t).substr(start, bar == std::string::npos ? bar : bar - start)));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    if (fields.size() != 3) {
      throw CorpusError(source, number, fields.size() < 3 ? "note" : "record",
                        "expected 'id | printed digits | note', got " + std::to_string(fields.size()) + " fields");
    }
    if (fields[0].empty()) throw CorpusError(source, number, "id", "empty id");
    if (fields[1].empty()) throw CorpusError(source, number, "printed", "empty printed value");
    corpus.entries.push_back({fields[0], fields[1], fields[2], number});
  }
  if (corpus.version.empty()) throw CorpusError(source, number, "version", "missing '# corpus-version:' line");
  return corpus;
}

Corpus load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError(path, 0, "path", "cannot open corpus file");
  return parse_corpus(in, path);
}

std::string default_corpus_path() {
  if (const char* env = std::getenv("CYCLOMETRIA_CORPUS"); env != nullptr && *env != '\0') return env;
  return CYCLOMETRIA_DEFAULT_CORPUS;
}

namespace {

enum class Match {
  Digits,  // whitespace-insensitive, trailing '.' ignored
  Word,    // first six letters, case-insensitive ("Defect." ~ "Defectus")
  Text,    // whitespace runs collapsed
};

struct Alternative {
  std::string convention;
  std::string value;
  Classification classification;
};

struct Expectation {
  std::string computed;
  Match match = Match::Digits;
  std::vector<Alternative> alternatives = {};
};

std::string normalize(const std::string& s, Match m) {
  std::string out;
  switch (m) {
    case Match::Digits:
      for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
      }
      while (!out.empty() && out.back() == '.') out.pop_back();
      return out;
    case Match::Word:
      for (char c : s) {
        if (std::isalpha(static_cast<unsigned char>(c))) out.push_back(static_cast<char>(std::tolower(c)));
      }
      return out.substr(0, 6);
    case Match::Text: {
      std::istringstream words(s);
      std::string w;
      while (words >> w) out += (out.empty() ? "" : " ") + w;
      return out;
    }
  }
  return out;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string digits(const FixedDecimal& x) { return BigInt(abs(x.mantissa())).get_str(); }

std::string mixed(const BigRational& r) {
  BigInt whole = r.floor();
  BigRational frac = r - BigRational(whole);
  if (frac.sign() == 0) return whole.get_str();
  return whole.get_str() + " " + frac.num().get_str() + "/" + frac.den().get_str();
}

std::string mark(BoundKind k) { return k == BoundKind::Defective ? "†" : "—"; }

std::string mark_of(const BigRational& r) {
  return mark(cmp_pi(r) == Ordering::Less ? BoundKind::Defective : BoundKind::Excessive);
}

FixedDecimal pi_truncated(unsigned scale) { return FixedDecimal::parse(pi_digits(scale + 1).insert(1, ".")); }

using Registry = std::map<std::string, Expectation>;

void add_table_one(Registry& reg, const Chain& chain) {
  for (const auto& seed : chain.seeds) {
    reg["t1." + seed.label + ".diam"] = {seed.raw.diameter.get_str()};
    reg["t1." + seed.label + ".periph"] = {seed.raw.periphery.get_str()};
    reg["t1." + seed.label + ".mark"] = {mark_of(seed.raw.value()), Match::Text};
  }
  for (const auto& step : chain.steps) {
    reg["t1." + step.originator_minor_label] = {step.originator_minor.get_str()};
    reg["t1." + step.originator_major_label] = {step.originator_major.get_str()};
    reg["fn.t1." + step.originator_minor_label] = {step.originator_minor.get_str()};
    reg["fn.t1." + step.originator_major_label] = {step.originator_major.get_str()};
    for (const auto& [label, raw] : {std::pair{step.label_minor, step.defective_raw},
                                     std::pair{step.label_major, step.excessive_raw}}) {
      reg["t1." + label + ".diam"] = {raw.diameter.get_str()};
      reg["t1." + label + ".periph"] = {raw.periphery.get_str()};
      reg["t1." + label + ".mark"] = {mark_of(raw.value()), Match::Text};
      reg["fn.t1." + label + ".fraction"] = {raw.periphery.get_str() + "/" + raw.diameter.get_str()};
    }
  }
}

const BoundPair& step_labeled(const Chain& chain, const std::string& label) {
  for (const auto& s : chain.steps) {
    if (s.label_minor == label || s.label_major == label) return s;
  }
  throw std::logic_error("chain has no step " + label);
}

RawRatio raw_of(const Chain& chain, const std::string& label) {
  const BoundPair& s = step_labeled(chain, label);
  return s.label_minor == label ? s.defective_raw : s.excessive_raw;
}

void add_reduced_forms(Registry& reg, const Chain& chain) {
  // cc is Cc written with periphery 71, i.e. both terms divided by 5.
  ReducedForm cc = reduced_form(raw_of(chain, "Cc"));
  reg["rf.cc.diam"] = {mixed(BigRational(cc.value.den()) / 5), Match::Text};
  reg["rf.cc.periph"] = {(BigRational(cc.value.num()) / 5).to_string()};
  reg["rf.cc.mark"] = {mark_of(cc.value), Match::Text};
  reg["fn.rf.cc.example"] = {(BigRational(71) / (BigRational(22) + BigRational(3, 5))).to_string()};

  ReducedForm d = reduced_form(raw_of(chain, "D"));
  reg["rf.d.diam"] = {d.value.den().get_str()};
  reg["rf.d.periph"] = {d.value.num().get_str()};
  reg["rf.d.mark"] = {mark_of(d.value), Match::Text};

  // The printed e equals Ee / 96, but carries the defective mark and the
  // translator attributes it to E. Both readings are kept.
  ReducedForm ee = reduced_form(raw_of(chain, "Ee"));
  ReducedForm e = reduced_form(raw_of(chain, "E"));
  reg["rf.e.diam"] = {ee.value.den().get_str(), Match::Digits,
                      {{"reduction of E", e.value.den().get_str(), Classification::ConventionAmbiguity}}};
  reg["rf.e.periph"] = {ee.value.num().get_str(), Match::Digits,
                        {{"reduction of E", e.value.num().get_str(), Classification::ConventionAmbiguity}}};
  reg["rf.e.mark"] = {mark_of(ee.value), Match::Text,
                      {{"mark of E (translator's attribution)", mark_of(e.value.abs()),
                        Classification::ConventionAmbiguity}}};

  auto source_of = [&](const ReducedForm& r, std::initializer_list<const char*> labels) {
    for (const char* l : labels) {
      if (reduced_form(raw_of(chain, l)).value == r.value) return std::string(l);
    }
    return std::string("?");
  };
  std::string attribution = source_of(cc, {"C", "Cc"}) + " " + source_of(d, {"D", "Dd"}) + " " +
                            source_of(ee, {"E", "Ee"});
  reg["fn.rf.attribution"] = {attribution, Match::Text,
                              {{"mark of e read as E", "Cc D E", Classification::ConventionAmbiguity}}};
}

void add_table_two(Registry& reg, const Chain& chain) {
  ExamenTable table = examen_table(chain, kExamenDiameterExponent);
  reg["t2.diam"] = {digits(table.diameter)};
  reg["t2.archimedes"] = {digits(table.archimedes)};
  for (const auto& row : table.rows) {
    std::string base = "t2." + row.label;
    reg[base + ".periph"] = {digits(row.periphery_digits)};
    reg[base + ".dev"] = {digits(row.deviation_digits), Match::Digits,
                          {{"difference of truncated rows", digits(truncated_difference(row)),
                            Classification::ConventionAmbiguity}}};
    reg[base + ".kind"] = {to_string(row.kind), Match::Word};
    if (row.label == "C") {
      // "Rationis C Defectum metitur haec Fractio 8/100000"
      FixedDecimal coarse = row.deviation_digits.truncated(5);
      reg["t2.C.defect_fraction"] = {coarse.mantissa().get_str() + "/" + pow10(5).get_str()};
    }
  }
}

void add_curious_ratio(Registry& reg) {
  CuriousRatioReport cr = curious_ratio();
  BigRational periph = cr.value * 991;
  reg["cr.diam"] = {"991"};
  reg["cr.periph"] = {mixed(periph), Match::Text};
  reg["cr.agreeing_digits"] = {std::to_string(cr.agreeing_digits)};
  // Smallest k with value - pi < k * 10^-9.
  BigInt k = cr.excess.hi().ceiled(9).mantissa();
  if (cr.excess.lo().ceiled(9).mantissa() != k) throw std::logic_error("curious ratio excess not resolved");
  reg["cr.excess_bound"] = {k.get_str()};
  reg["fn.cr.periph"] = {mixed(periph), Match::Text};
  reg["fn.cr.decimal"] = {decimal_expand(cr.value, 10).to_string()};
  // value - pi in units of 10^-7
  FixedDecimal excess7(cr.excess.lo().mantissa(), cr.excess.scale() - 7);
  reg["fn.cr.excess"] = {excess7.truncated(2).to_string(), Match::Digits,
                         {{"rounded", excess7.rounded(2).to_string(), Classification::Confirmed}}};
}

std::string arc_degrees(const LabeledPoint& p, const LabeledPoint& q) {
  // Unit circle: cos of the arc is the dot product.
  Surd3 c = p.x * q.x + p.y * q.y;
  if (c == Surd3(BigRational(1, 2))) return "60";
  if (c == Surd3(0, BigRational(1, 2))) return "30";
  if (c == Surd3(BigRational(-1, 2))) return "120";
  return "?";
}

void add_construction(Registry& reg) {
  ConstructionReport k = kochanski_construction(15);
  auto length = [&](const std::string& label) -> const NamedLength& {
    for (const auto& l : k.named_lengths) {
      if (l.label == label) return l;
    }
    throw std::logic_error("no named length " + label);
  };
  // A printed line is first checked against the truth, then against the
  // same arithmetic applied to the preceding printed line.
  auto line = [&](const std::string& label, std::vector<Alternative> propagated = {}) {
    const NamedLength& l = length(label);
    Expectation e{digits(l.truncated)};
    e.alternatives.push_back({"rounded", digits(l.rounded), Classification::Confirmed});
    for (auto& p : propagated) e.alternatives.push_back(std::move(p));
    return e;
  };
  const FixedDecimal printed_bi = FixedDecimal::parse("0.577350269189626");
  const FixedDecimal printed_ig = FixedDecimal::parse("0.422649730810373");
  const FixedDecimal printed_kl = FixedDecimal::parse("2.422649730810373");
  const FixedDecimal printed_sum = FixedDecimal::parse("9.869231718195572759955284399129");
  const FixedDecimal printed_il = FixedDecimal::parse("3.141533338705093");
  const FixedDecimal one = FixedDecimal(1, 0);

  reg["k.AB"] = line("AB");
  reg["k.BI"] = line("BI");
  reg["k.IG"] = line("IG", {{"propagated: AB minus printed BI", digits(one - printed_bi),
                             Classification::ConventionAmbiguity}});
  reg["k.KL"] = line("KL", {{"propagated: 2 plus printed IG", digits(FixedDecimal(2, 0) + printed_ig),
                             Classification::ConventionAmbiguity}});

  // The sum is printed with thirty decimals.
  Surd3 kl = Surd3(3) - Surd3(0, BigRational(1, 3));
  Surd3 sum = kl * kl + Surd3(4);
  FixedDecimal sum_true = certified_truncation([&](unsigned s) { return sum.enclose(s); }, 30);
  reg["k.sum"] = {digits(sum_true), Match::Digits,
                  {{"propagated: square of printed KL plus IK²", digits(printed_kl * printed_kl + FixedDecimal(4, 0)),
                    Classification::ConventionAmbiguity}}};
  reg["k.IL"] = line("IL", {{"propagated: root of printed sum", digits(fd_sqrt(printed_sum, 15)),
                             Classification::ConventionAmbiguity}});

  FixedDecimal z = certified_truncation(defect_z_enclosure, 15);
  reg["k.Z"] = {digits(z), Match::Digits,
                {{"rounded", digits(certified_rounding(defect_z_enclosure, 15)), Classification::Confirmed},
                 {"propagated: truncated pi minus printed IL", digits(pi_truncated(15) - printed_il),
                  Classification::ConventionAmbiguity}}};
  reg["k.X"] = {k.reciprocal_x.get_str()};
  reg["fn.k.Z"] = {certified_truncation(defect_z_enclosure, 13).to_string(), Match::Digits,
                   {{"rounded", certified_rounding(defect_z_enclosure, 13).to_string(), Classification::Confirmed}}};
  reg["fn.k.X"] = {k.reciprocal_x.get_str()};

  // "IK q + XL q": the squared legs of the right triangle IKL.
  auto points = construction_coordinates();
  Surd3 ik2 = squared_distance(point(points, "I"), point(points, "K"));
  Surd3 kl2 = squared_distance(point(points, "K"), point(points, "L"));
  Surd3 il2 = squared_distance(point(points, "I"), point(points, "L"));
  reg["k.sum_label"] = {ik2 + kl2 == il2 ? "KL" : "?", Match::Text};

  // "secentur ex C arcus utrinque aequales CE & EF": the two 60° arcs from C.
  const auto& c = point(points, "C");
  std::string second_arc = arc_degrees(c, point(points, "F")) == "60" ? "CF" : "EF";
  reg["k.arc_label"] = {second_arc, Match::Text};
  reg["k.arc_CE"] = {arc_degrees(c, point(points, "E"))};
  reg["k.arc_BE"] = {arc_degrees(point(points, "B"), point(points, "E"))};

  YearBoundReport year = year_bound_check(1685);
  reg["k.year"] = {year.holds ? "1685" : "?"};
  reg["k.year_lower"] = {year.lower.get_str()};
  reg["k.year_upper"] = {year.upper.get_str()};
}

void add_bisection(Registry& reg) {
  BisectionReport b = bisection_construction(9);
  const BigRational part(1, 32);
  reg["b.parts"] = {"32"};
  reg["b.circumference_parts"] = {mixed(b.ratio / part), Match::Text};
  reg["b.diam"] = {b.ratio.den().get_str()};
  reg["b.periph"] = {b.ratio.num().get_str()};
  reg["b.triple"] = {(b.decomposition[0].value / part).to_string()};
  reg["b.eighth"] = {(b.decomposition[1].value / part).to_string() + "/32"};
  reg["b.eighth_alt"] = {b.decomposition[1].value.to_string()};
  reg["b.P"] = {digits(decimal_expand(b.ratio, 8))};

  RealEvaluator q = [&](unsigned s) { return enclose(b.ratio, s + 1) - pi_enclosure(s + 1); };
  reg["b.Q"] = {digits(certified_truncation(q, 8)), Match::Digits,
                {{"rounded", digits(certified_rounding(q, 8)), Classification::Confirmed},
                 {"propagated: difference of truncated P and pi",
                  digits(decimal_expand(b.ratio, 8) - pi_truncated(8)), Classification::ConventionAmbiguity}}};
  reg["fn.b.Q"] = {certified_truncation(q, 8).to_string(), Match::Digits,
                   {{"rounded", certified_rounding(q, 8).to_string(), Classification::Confirmed}}};
  reg["fn.b.value"] = {decimal_expand(b.ratio, 10).to_string()};
}

Registry build_registry() {
  Registry reg;
  Chain chain = generate_chain(4);
  add_table_one(reg, chain);
  add_reduced_forms(reg, chain);
  add_table_two(reg, chain);
  add_curious_ratio(reg);
  add_construction(reg);
  add_bisection(reg);
  return reg;
}

const Registry& registry() {
  static const Registry reg = build_registry();
  return reg;
}

AuditFinding classify(const CorpusEntry& entry, const Expectation& e) {
  AuditFinding f{entry.id, entry.printed, e.computed, Classification::Confirmed, "exact", entry.note};
  std::string printed = normalize(entry.printed, e.match);
  if (printed == normalize(e.computed, e.match)) return f;
  for (const auto& alt : e.alternatives) {
    if (printed == normalize(alt.value, e.match)) {
      f.classification = alt.classification;
      f.convention = alt.convention;
      return f;
    }
  }
  std::string computed = normalize(e.computed, e.match);
  if (e.match == Match::Digits && all_digits(printed) && all_digits(computed) && printed.size() == computed.size()) {
    BigInt diff = BigInt(printed, 10) - BigInt(computed, 10);
    if (abs(diff) == 1) {
      f.classification = Classification::ConventionAmbiguity;
      f.convention = "last digit ±1";
      return f;
    }
  }
  f.classification =
      entry.id.rfind("fn.", 0) == 0 ? Classification::TranslatorMisprint : Classification::PaperMisprint;
  f.convention.clear();
  return f;
}

}  // namespace

AuditReport audit_corpus(const Corpus& corpus) {
  const Registry& reg = registry();
  AuditReport report;
  report.corpus_version = corpus.version;
  for (Classification c : {Classification::Confirmed, Classification::PaperMisprint,
                           Classification::TranslatorMisprint, Classification::ConventionAmbiguity}) {
    report.counts[c] = 0;
  }
  for (const auto& entry : corpus.entries) {
    auto it = reg.find(entry.id);
    if (it == reg.end()) throw CorpusError(corpus.source, entry.line, "id", "unknown id '" + entry.id + "'");
    report.findings.push_back(classify(entry, it->second));
    ++report.counts[report.findings.back().classification];
  }
  return report;
}

AuditReport audit_corpus() { return audit_corpus(load_corpus(default_corpus_path())); }

std::vector<std::string> auditable_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, _] : registry()) ids.push_back(id);
  return ids;
}

}  // namespace cyclometria
