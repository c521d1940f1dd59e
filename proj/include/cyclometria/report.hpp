#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cyclometria/rational.hpp"

namespace cyclometria {

/// Schema identifier written into every envelope; bumped whenever a body
/// layout changes.
inline constexpr const char* kReportSchema = "cyclometria.report/1";

struct ReportEnvelope {
  std::string schema = kReportSchema;
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::optional<std::string> produced_at;  // absent under --deterministic
  std::string corpus_version;
  nlohmann::json body;

  friend bool operator==(const ReportEnvelope&, const ReportEnvelope&) = default;
};

std::string serialize(const ReportEnvelope& envelope);
/// Throws std::invalid_argument on malformed input.
ReportEnvelope parse_envelope(const std::string& text);

enum class OutputFormat { Text, Records, Table };

/// Throws std::invalid_argument for anything but text, records, table.
OutputFormat parse_format(const std::string& name);

/// text: the printed layout with five-digit groups; records: the serialized
/// envelope; table: tab-separated rows with a header line.
std::string emit(const ReportEnvelope& envelope, OutputFormat format);

struct ReportOptions {
  bool deterministic = false;
  std::string corpus_path;  // empty: default_corpus_path()
};

ReportEnvelope pi_report(unsigned digits, const std::vector<BigRational>& compare, const ReportOptions& options);
ReportEnvelope chain_report(std::size_t depth, const ReportOptions& options);
ReportEnvelope examen_report(std::size_t depth, unsigned scale, const ReportOptions& options);
ReportEnvelope audit_report(const ReportOptions& options);
ReportEnvelope kochanski_report(unsigned scale, long year, const ReportOptions& options);
ReportEnvelope bisection_report(unsigned scale, const ReportOptions& options);
ReportEnvelope cf_report(std::size_t terms, const std::vector<BigRational>& classify, const ReportOptions& options);

}  // namespace cyclometria
