#pragma once

// Command dispatch for the regcat tool: every subcommand produces a Report
// and an exit code (0 holds/completed, 1 fails with witness, 2 usage or
// parse error, 3 resource limit or internal error).

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace regcat {

using Json = nlohmann::ordered_json;

struct Report {
  std::string command;
  bool ok = true;
  Json result = Json::object();
  std::vector<Json> witnesses;  // failure witnesses only
  std::map<std::string, std::int64_t> counts;
  std::int64_t elapsed_ms = 0;
};

/// {"command", "ok", "result", "witnesses", "counts", "elapsed_ms"} in
/// that order.
Json to_json(const Report& report);
std::string render_text(const Report& report);

enum ExitCode : int {
  exit_holds = 0,
  exit_fails = 1,
  exit_usage = 2,
  exit_resource = 3,
};

/// argv excludes the program name. Reports go to `out`, usage and error
/// text to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace regcat
