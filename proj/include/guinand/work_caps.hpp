#pragma once

#include <cstdint>

namespace guinand {

struct WorkCaps {
  // Largest n for which an r_k table is materialized.
  std::int64_t max_table_n = 1'000'000;
  // Box points visited by the brute-force r_k oracle (k * (2*floor(sqrt n)+1)^k).
  std::int64_t max_oracle_points = 1'000'000'000;
  // Estimated lattice points enumerated for shifted-lattice verification.
  std::int64_t max_lattice_points = 100'000'000;

  /// Defaults, with the enumeration caps replaced by GUINAND_WORKCAP when set.
  static WorkCaps from_environment();
};

}  // namespace guinand
