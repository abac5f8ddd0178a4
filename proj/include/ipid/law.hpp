#pragma once

#include <cstdint>
#include <vector>

#include "ipid/density.hpp"

namespace ipid {

// Maps a 1-based observation index to its 1-based density slot; phase aligns
// streams whose first sample is not slot 1. slot_index(n+T,T,p) == slot_index(n,T,p).
int slot_index(std::int64_t n, int period, int phase);

// A period-T tuple of densities. Slot for observation n is
// slots[slot_index(n, T, phase)], which makes the law periodic by construction.
class PeriodicLaw {
 public:
  explicit PeriodicLaw(std::vector<DensitySpec> slots);

  int period() const { return static_cast<int>(slots_.size()); }

  // 1-based slot access, matching slot_index.
  const DensitySpec& slot(int i) const { return slots_.at(static_cast<std::size_t>(i - 1)); }

  // Density governing observation index n (n >= 1) under the given phase.
  const DensitySpec& density_for(std::int64_t n, int phase) const {
    return slot(slot_index(n, period(), phase));
  }

  const std::vector<DensitySpec>& slots() const { return slots_; }

  bool operator==(const PeriodicLaw& other) const = default;

 private:
  std::vector<DensitySpec> slots_;
};

struct ChangeValidation {
  std::vector<double> per_slot_kl;
  double information_number = 0.0;
  bool is_valid_change = false;
};

// I = (1/T) sum_i D(post_i || pre_i); +inf propagates from any slot.
// Throws IncompatibleLaws on period mismatch.
double information_number(const PeriodicLaw& post, const PeriodicLaw& pre);

// Per-slot KLs plus the detectability verdict: valid iff every slot KL is
// finite and at least one exceeds 1e-12 (equivalently 0 < I < inf).
ChangeValidation validate_change(const PeriodicLaw& pre, const PeriodicLaw& post);

}  // namespace ipid
