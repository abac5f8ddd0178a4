#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ipid/detector.hpp"
#include "ipid/simulator.hpp"

namespace ipid {

enum class Rule { cusum, bank_cusum, sr };

std::string rule_name(Rule r);
Rule rule_from_name(const std::string& name);

// One simulated run of a stopping rule. stopping_time is absent when the
// horizon was reached first; censored_at then records the horizon.
struct TrialOutcome {
  std::optional<std::int64_t> stopping_time;
  std::optional<std::int64_t> censored_at;
  std::optional<std::int64_t> nu;
  std::uint64_t seed = 0;
};

// Feeds a seeded stream to the chosen rule until it fires or the horizon is
// reached. Configuration inconsistencies (period mismatch, wrong number of
// post laws for the rule) surface before any sampling. The cusum rule stops
// on the strict crossing w > threshold_a; bank_cusum and sr stop on the
// non-strict crossing of log(beta * M).
TrialOutcome run_until_stop(const ChangeModel& model, const DetectorConfig& config, Rule rule,
                            std::span<const PeriodicLaw> posts, std::int64_t horizon,
                            std::uint64_t seed);

// Mean time to false alarm estimate. Censored trials contribute the horizon,
// so with any censoring the estimate is flagged as a lower bound.
struct ArlEstimate {
  double mean = 0.0;
  double se = 0.0;  // NaN for a single trial
  std::int64_t trials = 0;
  std::int64_t censored = 0;
  bool is_lower_bound = false;
};

ArlEstimate estimate_arl(const PeriodicLaw& pre, const DetectorConfig& config, Rule rule,
                         std::span<const PeriodicLaw> posts, std::int64_t trials,
                         std::int64_t horizon, std::uint64_t seed, int threads = 0);

// Detection delay of a trial is the number of post-change observations the
// rule consumes: tau - nu + 1, counting X_nu itself (an alarm on the change
// sample has delay 1). Trials with tau < nu are false alarms and excluded
// from the conditional mean; censored trials are excluded and counted.
struct CaddCell {
  int nu = 0;
  double mean = 0.0;
  double se = 0.0;
  std::int64_t used = 0;          // trials with tau >= nu
  std::int64_t false_alarms = 0;  // trials with tau < nu
  std::int64_t censored = 0;
  bool available = false;  // false when no trial satisfied tau >= nu
};

// Conditional average detection delay, maximized over nu in {1..T} (the
// periodicity of the laws makes these the only distinct change phases).
struct CaddEstimate {
  double cadd = 0.0;
  double se = 0.0;
  int worst_nu = 0;
  std::vector<CaddCell> per_nu;
};

CaddEstimate estimate_cadd(const PeriodicLaw& pre, const PeriodicLaw& true_post, int phase,
                           const DetectorConfig& config, Rule rule,
                           std::span<const PeriodicLaw> posts, std::int64_t trials,
                           std::int64_t horizon, std::uint64_t seed, int threads = 0);

// First-order delay term log(beta) / I, shared by the lower and upper bounds
// when A = log(beta). Throws ConfigError unless beta > 1 and I > 0.
double delay_bound(double beta, double i_number);

struct TradeoffRow {
  double threshold_a = 0.0;
  double beta = 0.0;
  ArlEstimate arl;
  CaddEstimate cadd;
  double bound_lower = 0.0;  // log(beta) / I
  double bound_upper = 0.0;  // A / I; equals bound_lower when A = log(beta)
};

// One row per threshold A (beta = e^A), each an independent Monte Carlo run
// with a seed derived from (master seed, row index). Thresholds must be
// increasing. I is taken from the model's true post-change law.
std::vector<TradeoffRow> tradeoff_curve(const ChangeModel& model, Rule rule,
                                        std::span<const PeriodicLaw> posts,
                                        std::span<const double> a_values, std::int64_t trials,
                                        std::int64_t horizon, std::uint64_t seed, int threads = 0);

// Diagnostic for the no-change martingale property of R_n - nM: simulates
// R_{n_fixed} under the pre-change law and returns the sample mean and
// standard error of R_{n_fixed} - n_fixed * M (near 0 for a correct
// implementation).
struct MartingaleCheck {
  double mean_dev = 0.0;
  double se = 0.0;
};

MartingaleCheck martingale_check(const PeriodicLaw& pre, std::span<const PeriodicLaw> posts,
                                 std::int64_t n_fixed, std::int64_t trials, std::uint64_t seed,
                                 double clamp = kDefaultClamp, int threads = 0);

}  // namespace ipid
