#include "cyclometria/cli.hpp"

#include <algorithm>
#include <stdexcept>

#include "CLI11.hpp"

#include "cyclometria/audit.hpp"
#include "cyclometria/enclosure.hpp"
#include "cyclometria/examen.hpp"
#include "cyclometria/rational.hpp"
#include "cyclometria/report.hpp"

namespace cyclometria {

namespace {

std::vector<BigRational> parse_ratios(const std::vector<std::string>& texts) {
  std::vector<BigRational> out;
  for (const auto& t : texts) {
    auto slash = t.find('/');
    if (slash == std::string::npos) {
      out.push_back(make_rational(parse_integer(t), 1));
    } else {
      out.push_back(make_rational(parse_integer(t.substr(0, slash)), parse_integer(t.substr(slash + 1))));
    }
  }
  return out;
}

bool has_misprint(const ReportEnvelope& e) {
  const auto& counts = e.body.at("counts");
  for (const char* name : {"PaperMisprint", "TranslatorMisprint"}) {
    if (counts.contains(name) && counts.at(name).get<std::size_t>() > 0) return true;
  }
  return false;
}

}  // namespace

const std::map<std::string, std::vector<std::string>>& subcommand_operations() {
  static const std::map<std::string, std::vector<std::string>> ops = {
      {"pi", {"make_rational", "pi_enclosure", "pi_digits", "cmp_pi", "emit"}},
      {"chain", {"originator", "refine", "generate_chain", "reduced_form", "curious_ratio", "emit"}},
      {"examen", {"generate_chain", "examine", "decimal_expand", "render_examen", "emit"}},
      {"audit", {"audit_corpus", "emit"}},
      {"construct kochanski",
       {"kochanski_construction", "construction_coordinates", "year_bound_check", "fd_sqrt",
        "integer_sqrt_floor", "cmp_value_pi", "format_grouped", "parse_grouped", "emit"}},
      {"construct bisection", {"bisection_construction", "format_grouped", "parse_grouped", "emit"}},
      {"cf", {"make_rational", "pi_continued_fraction", "classify_bound", "emit"}},
  };
  return ops;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact reconstruction and audit of the cyclometric tables", "cyclometria"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  bool deterministic = false;
  std::string corpus;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "records", "table"}))
      ->capture_default_str();
  app.add_flag("--deterministic", deterministic, "Omit the timestamp so output is byte-identical across runs");
  app.add_option("--corpus", corpus, "Corpus file (default: $CYCLOMETRIA_CORPUS or the bundled corpus)");

  unsigned digits = 32;
  std::vector<std::string> compare;
  auto* pi = app.add_subcommand("pi", "Decimal places of pi from the rigorous oracle");
  pi->add_option("--digits", digits, "Decimal places")->check(CLI::Range(1u, 10000u))->capture_default_str();
  pi->add_option("--compare", compare, "Ratios P/Q to order against pi");

  std::size_t chain_depth = 4;
  auto* chain = app.add_subcommand("chain", "Bound chain with originators and reduced forms");
  chain->add_option("--depth", chain_depth, "Refinement steps after the seeds")
      ->check(CLI::Range(0, 40))
      ->capture_default_str();

  std::size_t examen_depth = 4;
  unsigned examen_scale = kExamenDiameterExponent;
  auto* examen = app.add_subcommand("examen", "Examination table against a diameter of 10^S parts");
  examen->add_option("--depth", examen_depth, "Refinement steps after the seeds")
      ->check(CLI::Range(0, 40))
      ->capture_default_str();
  examen->add_option("--scale", examen_scale, "Diameter exponent")->check(CLI::Range(1u, 2000u))->capture_default_str();

  bool strict = false;
  auto* audit = app.add_subcommand("audit", "Recompute every corpus entry and classify it");
  audit->add_flag("--strict", strict, "Exit with status 2 if any misprint is found");

  auto* construct = app.add_subcommand("construct", "Geometric constructions");
  construct->require_subcommand(1);
  unsigned kochanski_scale = 15;
  long year = 1685;
  auto* kochanski = construct->add_subcommand("kochanski", "Semicircle construction of the rectified quadrant");
  kochanski->add_option("--scale", kochanski_scale, "Decimal places (at least 15)")
      ->check(CLI::Range(15u, 2000u))
      ->capture_default_str();
  kochanski->add_option("--year", year, "Year for the decuple bound")->check(CLI::PositiveNumber)->capture_default_str();
  unsigned bisection_scale = 9;
  auto* bisection = construct->add_subcommand("bisection", "Bisection construction, 1024 : 3217");
  bisection->add_option("--scale", bisection_scale, "Decimal places (at least 9)")
      ->check(CLI::Range(9u, 2000u))
      ->capture_default_str();

  std::size_t terms = 30;
  std::vector<std::string> classify;
  auto* cf = app.add_subcommand("cf", "Continued fraction of pi and bound classification");
  cf->add_option("--terms", terms, "Number of partial quotients")->check(CLI::Range(1, 2000))->capture_default_str();
  cf->add_option("--classify", classify, "Ratios P/Q to classify");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success) ? 0 : 1;
  }

  ReportOptions options{deterministic, corpus};
  try {
    ReportEnvelope envelope;
    if (*pi) {
      envelope = pi_report(digits, parse_ratios(compare), options);
    } else if (*chain) {
      envelope = chain_report(chain_depth, options);
    } else if (*examen) {
      envelope = examen_report(examen_depth, examen_scale, options);
    } else if (*audit) {
      envelope = audit_report(options);
    } else if (*kochanski) {
      envelope = kochanski_report(kochanski_scale, year, options);
    } else if (*bisection) {
      envelope = bisection_report(bisection_scale, options);
    } else {
      envelope = cf_report(terms, parse_ratios(classify), options);
    }
    out << emit(envelope, parse_format(format));
    if (*audit && strict && has_misprint(envelope)) return 2;
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "cyclometria: " << e.what() << "\n";
    return 1;
  } catch (const CorpusError& e) {
    err << "cyclometria: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "cyclometria: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace cyclometria
