#pragma once

#include <cstdint>

namespace aft {

/// Addition/multiplication tally for the operation-count comparisons.
/// Conventions: mu(k) enters as a sign selection, never a multiplication;
/// transcendental library calls (cos, atan2, hypot, sqrt) are not counted
/// as multiplications either. One ledger per task; merge with +=.
struct OpCountLedger {
  std::int64_t additions = 0;
  std::int64_t multiplications = 0;
  std::int64_t samples_used = 0;

  OpCountLedger& operator+=(const OpCountLedger& other) {
    additions += other.additions;
    multiplications += other.multiplications;
    samples_used += other.samples_used;
    return *this;
  }
};

}  // namespace aft
