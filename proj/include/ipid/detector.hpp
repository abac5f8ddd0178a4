#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ipid/law.hpp"
#include "ipid/math_util.hpp"

namespace ipid {

// Running statistic of the periodic CUSUM recursion W_{n+1} = W_n^+ + Z_{n+1}.
struct CusumState {
  double w = 0.0;
  std::int64_t n = 0;  // observations consumed
  int phase = 0;
};

// Per-hypothesis statistics for a bank of M post-change laws: the M CUSUM
// statistics and, in log domain, the M inner sums of the Shiryaev-Roberts
// statistic R_n. sr_log entries start at -inf, the log of an empty sum.
struct BankState {
  std::vector<double> per_hyp;
  std::vector<double> sr_log;
  std::int64_t n = 0;
  int phase = 0;
};

struct DetectorConfig {
  double threshold_a = 0.0;
  double beta = 1.0;
  double clamp = kDefaultClamp;

  // A = log(beta); keeps threshold_a and beta linked.
  static DetectorConfig from_beta(double beta, double clamp = kDefaultClamp);
  static DetectorConfig from_threshold(double a, double clamp = kDefaultClamp);
};

CusumState cusum_init(int phase = 0);

// One recursion step using the slot of observation n+1.
CusumState cusum_update(const CusumState& state, const Observation& x, const PeriodicLaw& pre,
                        const PeriodicLaw& post, double clamp = kDefaultClamp);

// Direct (unrecursive) statistic: max over k in [1, n] of the clamped partial
// LLR sums over observations[k..n]. Oracle for cusum_update.
double cusum_direct(std::span<const Observation> observations, const PeriodicLaw& pre,
                    const PeriodicLaw& post, int phase = 0, double clamp = kDefaultClamp);

// Strict crossing: true iff w > a.
bool cusum_stopped(const CusumState& state, double a);

// A = log(beta); beta must exceed 1.
double calibrate_threshold(double beta);

BankState bank_init(std::size_t m, int phase = 0);

// Updates all M CUSUM statistics and the M log-domain SR components:
// log R_{n+1} = log(exp(log R_n) + 1) + Z_{n+1}, the log form of
// R_{n+1} = (R_n + 1) * likelihood ratio, which telescopes to the
// double-sum definition of the SR statistic.
BankState bank_update(const BankState& state, const Observation& x, const PeriodicLaw& pre,
                      std::span<const PeriodicLaw> posts, double clamp = kDefaultClamp);

// Non-strict crossing of log(beta*m) by the largest per-hypothesis CUSUM.
bool bank_cusum_stopped(const BankState& state, double beta, std::size_t m);

// Non-strict crossing of log(beta*m) by log R_n.
bool sr_stopped(const BankState& state, double beta, std::size_t m);

double bank_max_statistic(const BankState& state);

// log R_n; -inf at n = 0 (empty sum).
double sr_log_statistic(const BankState& state);

}  // namespace ipid
