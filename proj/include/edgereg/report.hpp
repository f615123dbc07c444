#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace edgereg::verify {

enum class Verdict { pass, fail, skipped };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// Outcome of checking one statement on one instance. A fail always carries
/// a witness; a skip always carries a reason.
struct Report {
  std::string statement;
  nlohmann::json instance = nlohmann::json::object();
  Verdict verdict = Verdict::skipped;
  std::string reason;
  nlohmann::json witness;  // null unless verdict == fail
  nlohmann::json details = nlohmann::json::object();
  std::string field;
  nlohmann::json caps;

  bool passed() const { return verdict == Verdict::pass; }
  bool failed() const { return verdict == Verdict::fail; }
  bool skipped() const { return verdict == Verdict::skipped; }

  /// statement, then instance graph6 (when present), then the full instance.
  std::string sort_key() const;
};

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string to_json_line(const Report& r);

/// Stable sort by sort_key(); concurrent runs emit identical bytes.
void sort_reports(std::vector<Report>& reports);

struct SummaryRow {
  std::string statement;
  std::size_t instances = 0;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
};

std::vector<SummaryRow> summarize(std::span<const Report> reports);
/// statement,instances,pass,fail,skipped
void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows);

}  // namespace edgereg::verify
