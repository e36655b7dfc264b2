// Table model and renderers (markdown, tsv, json) with a footer carrying
// engine version and parameters, excluded from golden comparisons.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rhact {

inline constexpr const char* kEngineVersion = "1.0.0";

enum class Format { kMarkdown, kTsv, kJson };

struct Table {
  int id = 0;  // catalog id 1..6, or 0 for ad-hoc reports
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> params;  // footer lines
};

Format parse_format(const std::string& name);
std::string render(const Table& t, Format fmt);

// Strip footer lines (prefixed "#:") and trailing whitespace for comparison.
std::string comparable_payload(const std::string& rendered);

struct DiffResult {
  bool ok = false;
  std::string message;  // first divergence, or bootstrap instructions
};
DiffResult diff_against_golden(const std::string& rendered,
                               const std::string& golden_path);

}  // namespace rhact
