#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace gwb::cli {

enum class Command { invariant, transform, verify, table, cache };
enum class OutputFormat { text, json, csv };

struct RunConfig {
  Command command = Command::invariant;
  int max_degree = 6;
  OutputFormat output = OutputFormat::text;
  // --cache, else $GW_CACHE, else ./gw_cache.json
  std::filesystem::path cache_path;
  bool use_cache = true;
  int jobs = 1;
};

enum ExitCode : int { kOk = 0, kUsage = 1, kVerificationFailed = 2 };

// Runs one command line (without argv[0]). Reports go to `out`, diagnostics
// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gwb::cli
