#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ipid/law.hpp"
#include "ipid/rng.hpp"

namespace ipid {

// Data-generating model: pre-change law up to the change point, post-change
// law from it. nu is 1-based and X_nu is the FIRST post-change sample;
// nullopt means the change never happens.
struct ChangeModel {
  ChangeModel(PeriodicLaw pre_law, PeriodicLaw post_law, std::optional<std::int64_t> change_point,
              int phase_offset = 0);

  static ChangeModel no_change(PeriodicLaw pre_law, int phase_offset = 0);

  PeriodicLaw pre;
  PeriodicLaw post;
  std::optional<std::int64_t> nu;
  int phase = 0;
};

// Draws the stream X_1, X_2, ... lazily. A fixed seed reproduces the
// identical sequence; the draw for X_n does not depend on how many samples
// are eventually requested, so detectors sharing a seed share the path.
class StreamSampler {
 public:
  StreamSampler(const ChangeModel& model, std::uint64_t seed);

  Observation next();
  std::int64_t position() const { return n_; }  // samples drawn so far

  // True when the upcoming sample X_{position()+1} is post-change.
  bool post_regime_next() const;

 private:
  const ChangeModel& model_;
  Engine engine_;
  std::int64_t n_ = 0;
};

Observation sample_density(const DensitySpec& spec, Engine& engine);

// The full stream X_1..X_n_max as a vector; pure function of (model, n_max, seed).
std::vector<Observation> sample_stream(const ChangeModel& model, std::int64_t n_max,
                                       std::uint64_t seed);

// Scalar parameter curve theta(t), t in [0,1], tabulated on a uniform grid.
// Families with one free scalar parameter: Gaussian mean (fixed variance
// supplied separately) or Poisson rate.
struct ParamCurve {
  enum class Family { gaussian_mean, poisson_rate };
  Family family = Family::gaussian_mean;
  std::vector<double> values;  // K >= 1 samples of theta on [0,1]
};

// Step-sampled law: slot i gets theta(i/T) by piecewise-linear interpolation
// of the curve table. `fixed` supplies the Gaussian variance; ignored for
// Poisson. Throws ConfigError when a Poisson rate interpolates to <= 0.
PeriodicLaw law_from_curve(const ParamCurve& curve, int t_period, double fixed = 1.0);

}  // namespace ipid
