#include "gwb/report.hpp"

#include <algorithm>
#include <iomanip>

namespace gwb::report {

namespace {

std::string value_or_dash(const std::optional<ExactRational>& v) { return v ? v->to_string() : "-"; }

nlohmann::ordered_json value_json(const std::optional<ExactRational>& v) {
  if (!v) return nullptr;
  return v->to_string();
}

std::string params_string(const rules::RuleApplication& app) {
  std::string s;
  for (const auto& [k, v] : app.params) {
    if (!s.empty()) s += ";";
    s += k + "=" + v;
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

nlohmann::ordered_json to_json(const rules::RuleApplication& app) {
  nlohmann::ordered_json j;
  j["rule"] = std::string(rules::to_string(app.rule));
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : app.params) params[k] = v;
  j["params"] = params;
  nlohmann::ordered_json gates = nlohmann::ordered_json::array();
  for (const auto& g : app.gates) gates.push_back({{"name", g.name}, {"pass", g.passed}});
  j["gates"] = gates;
  j["source"] = app.source.to_string();
  if (app.target)
    j["target"] = app.target->to_string();
  else if (app.target_is_zero)
    j["target"] = "0";
  else
    j["target"] = nullptr;
  j["source_value"] = value_json(app.source_value);
  j["target_value"] = value_json(app.target_value);
  j["verdict"] = std::string(rules::to_string(app.verdict));
  if (app.budget) {
    const auto& b = *app.budget;
    j["index_budget"] = {{"scenario", std::string(index::to_string(b.scenario))},
                         {"index_plus", b.index_plus},
                         {"index_minus", b.index_minus},
                         {"bound", b.is_bound},
                         {"degree_sum", b.degree_sum},
                         {"minimal_component_excluded", b.component_excluded}};
  }
  if (!app.notes.empty()) j["notes"] = app.notes;
  return j;
}

void write_json_lines(std::ostream& os, const std::vector<rules::RuleApplication>& rows) {
  for (const auto& row : rows) os << to_json(row).dump() << '\n';
}

void write_csv(std::ostream& os, const std::vector<rules::RuleApplication>& rows) {
  os << "rule,params,verdict,source_value,target_value,gates_passed\n";
  for (const auto& row : rows) {
    os << rules::to_string(row.rule) << ',' << csv_field(params_string(row)) << ',' << rules::to_string(row.verdict)
       << ',' << value_or_dash(row.source_value) << ',' << value_or_dash(row.target_value) << ','
       << (row.gates_passed() ? "yes" : "no") << '\n';
  }
}

void write_text(std::ostream& os, const std::vector<rules::RuleApplication>& rows) {
  std::size_t pw = 6;
  for (const auto& row : rows) pw = std::max(pw, params_string(row).size());
  for (const auto& row : rows) {
    os << std::left << std::setw(12) << rules::to_string(row.rule) << std::setw(static_cast<int>(pw) + 2)
       << params_string(row) << std::setw(15) << rules::to_string(row.verdict) << value_or_dash(row.source_value)
       << " | " << value_or_dash(row.target_value);
    for (const auto& g : row.gates)
      if (!g.passed) os << "  [failed: " << g.name << "]";
    os << '\n';
  }
}

}  // namespace gwb::report
