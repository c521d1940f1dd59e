#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclometria {

enum class Classification { Confirmed, PaperMisprint, TranslatorMisprint, ConventionAmbiguity };

std::string to_string(Classification c);

/// Malformed corpus: carries the 1-based line and the offending field.
class CorpusError : public std::runtime_error {
 public:
  CorpusError(std::string source, std::size_t line, std::string field, const std::string& message);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::string source_;
  std::size_t line_;
  std::string field_;
};

/// One `id | printed digits | note` record. `printed` keeps the printed
/// spacing verbatim.
struct CorpusEntry {
  std::string id;
  std::string printed;
  std::string note;
  std::size_t line = 0;
};

struct Corpus {
  std::string version;
  std::string source;
  std::vector<CorpusEntry> entries;
};

/// `# corpus-version: V` sets the version; other `#` lines and blank lines
/// are skipped. Throws CorpusError.
Corpus parse_corpus(std::istream& in, const std::string& source = "<corpus>");
Corpus load_corpus(const std::string& path);

/// $CYCLOMETRIA_CORPUS if set, otherwise the corpus shipped with the sources.
std::string default_corpus_path();

struct AuditFinding {
  std::string location;
  std::string printed;
  std::string computed;
  Classification classification;
  /// Which rule produced the classification: "exact", "rounded",
  /// "propagated: ...", "last digit ±1", or empty for a misprint.
  std::string convention;
  std::string note;
};

struct AuditReport {
  std::string corpus_version;
  std::vector<AuditFinding> findings;
  std::map<Classification, std::size_t> counts;
};

/// One finding per corpus entry, in corpus order. A corpus id the auditor
/// cannot compute is a CorpusError on that line's id field.
AuditReport audit_corpus(const Corpus& corpus);
AuditReport audit_corpus();

/// Every id audit_corpus knows how to recompute, sorted.
std::vector<std::string> auditable_ids();

}  // namespace cyclometria
