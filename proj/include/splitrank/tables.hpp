#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "splitrank/hall.hpp"
#include "splitrank/product.hpp"

namespace splitrank {

struct RowCheck {
  std::string space;
  bool ok = false;
  std::string detail;  // expected-vs-actual diff, or a short summary
  std::string note;    // documented discrepancy in the source table, if any
};

struct SweepReport {
  std::string title;
  std::vector<RowCheck> rows;
  int failures() const;
  bool ok() const { return failures() == 0; }
};

/// Splitting ranks and maximizer names for every table row instantiated over
/// its admissible (r, k) range; also re-checks the dimension column.
SweepReport verify_table1(int max_rank, int max_param_k);

/// Dimension gaps and second-maximizer names (rank >= 4 rows).
SweepReport verify_table2(int max_rank, int max_param_k);

/// dimension(entry) against the closed-form n column, every instantiated row.
SweepReport verify_dimensions(int max_rank, int max_param_k);

/// srk^k <= srk - 2(k-1) across the catalog; the four low-rank exceptions
/// must fail at k = r and nowhere else.
SweepReport verify_ksrk(int max_rank, int max_param_k);

/// Seeded random products of admissible factors; checks
/// si^k >= si^1 + 2(k-1) for every k. With allow_excluded, products
/// containing an excluded factor are reported but not counted as failures.
SweepReport product_bound_sweep(int count, std::uint64_t seed, int max_factors,
                               int max_factor_rank, int max_rank, int max_param_k,
                               bool allow_excluded);

/// Seeded random spanning frames per admissible low-rank entry; checks the
/// cardinality bound and that the induced matching instance is feasible with
/// a valid assignment. Instances small enough for it (<= 4 covectors, <= 16
/// slots) are also checked against the exhaustive Hall condition.
SweepReport verify_hall_sweep(int frames_per_entry, std::uint64_t seed, int max_entry_rank,
                              int max_rank, int max_param_k);

}  // namespace splitrank
