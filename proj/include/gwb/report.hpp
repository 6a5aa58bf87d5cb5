#pragma once

#include "gwb/rules.hpp"

#include <nlohmann/json.hpp>

#include <ostream>
#include <vector>

namespace gwb::report {

// {rule, params, gates, source_value, target_value, verdict, ...}
nlohmann::ordered_json to_json(const rules::RuleApplication& app);

void write_json_lines(std::ostream& os, const std::vector<rules::RuleApplication>& rows);
void write_csv(std::ostream& os, const std::vector<rules::RuleApplication>& rows);
void write_text(std::ostream& os, const std::vector<rules::RuleApplication>& rows);

}  // namespace gwb::report
