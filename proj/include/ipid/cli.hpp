#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ipid/evaluation.hpp"
#include "ipid/serialization.hpp"
#include "ipid/stream_io.hpp"

namespace ipid {

enum class Mode { detect, simulate, evaluate, calibrate };

std::string mode_name(Mode m);

// Resolved run configuration. Loaded from a JSON config file, overridden by
// flags, then validated per subcommand. All randomness flows from `seed`.
struct RunConfig {
  Mode mode = Mode::detect;
  std::optional<PeriodicLaw> pre;
  std::vector<PeriodicLaw> posts;
  Rule rule = Rule::cusum;
  std::optional<double> beta;
  std::optional<double> threshold_a;
  double clamp = kDefaultClamp;
  int phase = 0;
  std::uint64_t seed = 1;
  std::int64_t trials = 10000;
  std::int64_t horizon = 100000;
  std::int64_t n_max = 1000;
  std::optional<std::int64_t> nu;
  std::vector<double> a_values;
  std::optional<std::int64_t> martingale_n;
  std::optional<StreamFormat> format;

  std::string input;
  std::string output;
  std::string trajectory;
};

// Unset fields inherit the RunConfig defaults; flag overrides are applied by
// the CLI front end after loading.
RunConfig config_from_json(const Json& j);

// Echo sufficient to reproduce the run: laws inline, rule, thresholds,
// clamp, phase, seed and input path (output paths are excluded so reports
// do not depend on where they are written).
Json config_echo(const RunConfig& cfg);

// Subcommand bodies. Each validates its config (throwing ConfigError) before
// touching data (DataError for malformed input), writes its artifacts, and
// prints a short JSON result to `out`.
void cmd_detect(const RunConfig& cfg, std::ostream& out);
void cmd_simulate(const RunConfig& cfg, std::ostream& out);
void cmd_evaluate(const RunConfig& cfg, std::ostream& out);
void cmd_calibrate(const RunConfig& cfg, std::ostream& out);

// Exit codes: 0 completed (alarm or not), 2 config error, 3 data error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ipid
