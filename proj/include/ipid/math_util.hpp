#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

namespace ipid {

inline constexpr double kDefaultClamp = 50.0;

// Log-mass assigned to zero-probability categorical outcomes so that
// log-likelihood ratios stay finite (combined with clamping).
inline constexpr double kLogMassFloor = -745.0;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(1 + e^a), safe for a = -inf (empty-sum sentinel) and large |a|.
inline double log1p_exp(double a) {
  if (a == kNegInf) return 0.0;
  if (a > 0.0) return a + std::log1p(std::exp(-a));
  return std::log1p(std::exp(a));
}

// log(sum_i e^{v_i}); returns -inf for an empty span or all -inf entries.
inline double log_sum_exp(std::span<const double> v) {
  double m = kNegInf;
  for (double x : v) m = std::max(m, x);
  if (m == kNegInf) return kNegInf;
  double s = 0.0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

inline double clamp_to(double x, double bound) {
  return std::clamp(x, -bound, bound);
}

// Mean and standard error of a sample; se is NaN for fewer than 2 values.
struct MeanSe {
  double mean = std::numeric_limits<double>::quiet_NaN();
  double se = std::numeric_limits<double>::quiet_NaN();
};

inline MeanSe mean_se(std::span<const double> xs) {
  MeanSe out;
  if (xs.empty()) return out;
  double sum = 0.0;
  for (double x : xs) sum += x;
  out.mean = sum / static_cast<double>(xs.size());
  if (xs.size() < 2) return out;
  double ss = 0.0;
  for (double x : xs) {
    const double d = x - out.mean;
    ss += d * d;
  }
  const auto n = static_cast<double>(xs.size());
  out.se = std::sqrt(ss / (n - 1.0) / n);
  return out;
}

}  // namespace ipid
