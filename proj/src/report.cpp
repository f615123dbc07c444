#include "edgereg/report.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

namespace edgereg::verify {

using nlohmann::json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "skipped";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "pass") return Verdict::pass;
  if (s == "fail") return Verdict::fail;
  if (s == "skipped") return Verdict::skipped;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

std::string Report::sort_key() const {
  std::string key = statement;
  key += '\t';
  if (instance.contains("graph6")) key += instance["graph6"].get<std::string>();
  key += '\t';
  key += instance.dump();
  return key;
}

json to_json(const Report& r) {
  json out;
  out["statement"] = r.statement;
  out["instance"] = r.instance;
  out["verdict"] = to_string(r.verdict);
  if (!r.reason.empty()) out["reason"] = r.reason;
  if (!r.witness.is_null()) out["witness"] = r.witness;
  out["details"] = r.details;
  out["field"] = r.field;
  out["caps"] = r.caps;
  return out;
}

Report report_from_json(const json& j) {
  Report r;
  r.statement = j.at("statement").get<std::string>();
  r.instance = j.at("instance");
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.reason = j.value("reason", "");
  if (j.contains("witness")) r.witness = j["witness"];
  r.details = j.value("details", json::object());
  r.field = j.value("field", "");
  r.caps = j.value("caps", json());
  return r;
}

std::string to_json_line(const Report& r) { return to_json(r).dump(); }

void sort_reports(std::vector<Report>& reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const Report& a, const Report& b) { return a.sort_key() < b.sort_key(); });
}

std::vector<SummaryRow> summarize(std::span<const Report> reports) {
  std::map<std::string, SummaryRow> rows;
  for (const auto& r : reports) {
    auto& row = rows[r.statement];
    row.statement = r.statement;
    ++row.instances;
    switch (r.verdict) {
      case Verdict::pass: ++row.pass; break;
      case Verdict::fail: ++row.fail; break;
      case Verdict::skipped: ++row.skipped; break;
    }
  }
  std::vector<SummaryRow> out;
  for (auto& [name, row] : rows) out.push_back(row);
  return out;
}

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows) {
  out << "statement,instances,pass,fail,skipped\n";
  for (const auto& row : rows) {
    out << row.statement << ',' << row.instances << ',' << row.pass << ',' << row.fail << ',' << row.skipped << '\n';
  }
}

}  // namespace edgereg::verify
