#pragma once

#include <functional>
#include <optional>
#include <string>

#include "davkit/core/serialize.hpp"

namespace davkit::cli {

inline constexpr const char* kSchema = "davkit/1";

enum class Command { kDavenport, kAtoms, kCheckMinimal, kReorder, kBounds, kConstruct, kClassify, kVerify, kHuntChiGap };
enum class OutputFormat { kJson, kCsv, kText };

const char* command_name(Command c);
Command parse_command(const std::string& name);
const char* format_name(OutputFormat f);
OutputFormat parse_format(const std::string& name);

// One batch job. `parameters` holds the command-specific options (see
// README); keys are validated before any computation starts.
struct JobSpec {
  Command command = Command::kDavenport;
  std::string ground;
  json parameters = json::object();
  OutputFormat output = OutputFormat::kJson;
  bool stats = true;
};

json to_json(const JobSpec& spec);
JobSpec job_spec_from_json(const json& j);

enum ExitCode { kOk = 0, kUsage = 1, kCapExceeded = 2, kConsistency = 3 };

struct RunContext {
  // Overrides the element-enumeration and brute-force guards.
  std::optional<i64> guard;
  // Receives progress lines for long searches; never part of the output.
  std::function<void(const std::string&)> progress;
};

struct JobResult {
  int exit_code = kOk;
  std::string output;  // the serialized report, newline-terminated
};

JobResult run(const JobSpec& spec, const RunContext& ctx = {});

}  // namespace davkit::cli
