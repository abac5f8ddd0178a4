#include "ipid/law.hpp"

#include <cmath>

#include "ipid/errors.hpp"

namespace ipid {

int slot_index(std::int64_t n, int period, int phase) {
  if (n < 1) throw ConfigError("observation index must be >= 1");
  if (period < 1) throw ConfigError("period must be >= 1");
  if (phase < 0 || phase >= period) throw ConfigError("phase must lie in [0, period)");
  return static_cast<int>((n - 1 + phase) % period) + 1;
}

PeriodicLaw::PeriodicLaw(std::vector<DensitySpec> slots) : slots_(std::move(slots)) {
  if (slots_.empty()) throw ConfigError("a periodic law needs at least one slot");
}

namespace {

void check_periods(const PeriodicLaw& a, const PeriodicLaw& b) {
  if (a.period() != b.period()) throw IncompatibleLaws("laws have different periods");
}

}  // namespace

double information_number(const PeriodicLaw& post, const PeriodicLaw& pre) {
  check_periods(post, pre);
  double sum = 0.0;
  for (int i = 1; i <= pre.period(); ++i) sum += kl_divergence(post.slot(i), pre.slot(i));
  return sum / static_cast<double>(pre.period());
}

ChangeValidation validate_change(const PeriodicLaw& pre, const PeriodicLaw& post) {
  check_periods(pre, post);
  ChangeValidation v;
  v.per_slot_kl.reserve(static_cast<std::size_t>(pre.period()));
  bool all_finite = true;
  bool any_positive = false;
  double sum = 0.0;
  for (int i = 1; i <= pre.period(); ++i) {
    const double kl = kl_divergence(post.slot(i), pre.slot(i));
    v.per_slot_kl.push_back(kl);
    sum += kl;
    all_finite = all_finite && std::isfinite(kl);
    any_positive = any_positive || kl > 1e-12;
  }
  v.information_number = sum / static_cast<double>(pre.period());
  v.is_valid_change = all_finite && any_positive;
  return v;
}

}  // namespace ipid
