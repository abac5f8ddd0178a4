#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ipid/math_util.hpp"

namespace ipid {

// Observation value: real for Gaussian support, nonnegative integer for
// Poisson counts and categorical symbols (0-based alphabet indices).
using Observation = std::variant<double, std::int64_t>;

inline Observation obs_real(double x) { return Observation{x}; }
inline Observation obs_count(std::int64_t k) { return Observation{k}; }

enum class SupportKind { real, count, symbol };

std::string support_name(SupportKind k);

struct GaussianSpec {
  double mean = 0.0;
  double variance = 1.0;
};

struct PoissonSpec {
  double rate = 1.0;
};

struct CategoricalSpec {
  std::vector<double> probs;  // nonnegative, sums to 1 within 1e-9
};

// A single per-slot observation density. Construction validates parameters;
// values are immutable afterwards.
class DensitySpec {
 public:
  static DensitySpec gaussian(double mean, double variance);
  static DensitySpec poisson(double rate);
  static DensitySpec categorical(std::vector<double> probs);

  SupportKind support() const;
  const std::variant<GaussianSpec, PoissonSpec, CategoricalSpec>& family() const { return family_; }

  bool is_gaussian() const { return std::holds_alternative<GaussianSpec>(family_); }
  bool is_poisson() const { return std::holds_alternative<PoissonSpec>(family_); }
  bool is_categorical() const { return std::holds_alternative<CategoricalSpec>(family_); }

  const GaussianSpec& as_gaussian() const { return std::get<GaussianSpec>(family_); }
  const PoissonSpec& as_poisson() const { return std::get<PoissonSpec>(family_); }
  const CategoricalSpec& as_categorical() const { return std::get<CategoricalSpec>(family_); }

  // Parameter-wise equality (same family, identical parameters).
  bool operator==(const DensitySpec& other) const { return family_ == other.family_; }

 private:
  explicit DensitySpec(std::variant<GaussianSpec, PoissonSpec, CategoricalSpec> f)
      : family_(std::move(f)) {}

  std::variant<GaussianSpec, PoissonSpec, CategoricalSpec> family_;
};

bool operator==(const GaussianSpec& a, const GaussianSpec& b);
bool operator==(const PoissonSpec& a, const PoissonSpec& b);
bool operator==(const CategoricalSpec& a, const CategoricalSpec& b);

// Natural-log density/mass of x under spec. Never returns -inf: categorical
// outcomes with zero mass evaluate to the floor kLogMassFloor.
// Throws InvalidObservation when x is outside the family's support type.
double log_pdf(const DensitySpec& spec, const Observation& x);

// Z = log g(x) - log f(x), truncated to [-clamp, clamp]; always finite.
// Throws InvalidPair when g and f have different support kinds.
double log_likelihood_ratio(const DensitySpec& g, const DensitySpec& f, const Observation& x,
                            double clamp = kDefaultClamp);

// D(g || f) in closed form. Returns +inf when g places mass where f has
// none (categorical). Throws InvalidPair on support mismatch.
double kl_divergence(const DensitySpec& g, const DensitySpec& f);

}  // namespace ipid
