#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "walks/walk_oracle.hpp"

namespace walks::cli {

enum ExitCode : int { Success = 0, VerificationFailure = 1, UsageError = 2 };

enum class Format { Json, Csv, Text };

/// Resolved settings for one invocation: defaults, then the --config file,
/// then explicit flags.
struct RunConfig {
  std::string lattice = "square";
  std::string region = "three-quadrant";
  Point start{0, 0};
  int n = 0;
  std::size_t order = 12;
  std::size_t heavy_order = 10;
  long max_length = 24;
  std::optional<Point> endpoint;
  std::string suite = "all";
  std::vector<std::string> ids;
  Format format = Format::Json;
  unsigned threads = 0;

  WalkModel model() const;
};

Format parse_format(const std::string& name);
/// "i,j" with optional spaces.
Point parse_point(const std::string& text);

/// Keys mirror the long flag names (start/endpoint as "i,j" or [i, j]).
/// Unknown keys are rejected.
void apply_config(RunConfig& config, const nlohmann::json& j);

/// Runs the command line; never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace walks::cli
