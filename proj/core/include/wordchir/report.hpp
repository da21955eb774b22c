#pragma once

#include <span>
#include <string>
#include <vector>

#include "wordchir/classify.hpp"

namespace wordchir {

// JSON report document: {"tool", "version", "items": [...]}. Each item
// carries the word, status, rule firings, embedded certificates (in the
// endomorphism text format) and the witness reference, so a report can be
// audited without re-running any search.
std::string report_to_json(std::span<const Verdict> verdicts, bool pretty = true);

std::string census_to_json(const CensusReport& report, bool pretty = true);

struct ReportVerification {
  bool ok = true;
  int items = 0;
  int certificates_checked = 0;
  std::vector<std::string> errors;
};

// Re-parses every word and endomorphism in a report and re-checks each
// certificate and each GcdSurjective firing. Needs nothing beyond word
// arithmetic and endomorphism application.
ReportVerification verify_report_json(const std::string& json_text);

}  // namespace wordchir
