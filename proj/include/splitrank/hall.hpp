#pragma once

#include <string>
#include <vector>

#include "splitrank/rng.hpp"
#include "splitrank/split_rank.hpp"

namespace splitrank {

/// dim(Q_{i_1} + ... + Q_{i_k}): total multiplicity of the positive roots
/// NOT vanishing on the span of the selected covectors. Satisfies
/// q_sum_dim + (vanishing multiplicity sum) = n - r.
long q_sum_dim(const SymmetricSpaceEntry& entry, const std::vector<Covector>& covectors,
               const std::vector<int>& subset);

struct CardinalityViolation {
  std::vector<int> subset;  // 0-based covector indices
  long q_dim = 0;
  long bound = 0;  // 2k + n - srk - 2
};

struct CardinalityReport {
  std::string space;
  long n = 0, r = 0, srk = 0;
  bool ok = false;
  std::vector<CardinalityViolation> violations;
};

/// Checks q_sum_dim >= 2k + n - srk - 2 over every non-empty subset of a
/// spanning frame of r covectors. Throws on a non-spanning frame.
CardinalityReport verify_cardinality(const SymmetricSpaceEntry& entry,
                                     const std::vector<Covector>& frame);

/// Demand-capacitated bipartite instance: covectors with demands on the
/// left, one slot per (positive root, multiplicity copy) on the right.
struct MatchingInstance {
  struct Slot {
    int root_index = 0;  // into the root system's positive_roots()
    int copy = 0;        // 1..m_alpha
  };
  int left_count = 0;
  std::vector<long> demands;            // per left node
  std::vector<Slot> slots;              // |slots| = n - r
  std::vector<std::vector<bool>> edge;  // edge[left][root_index], copy-independent
  long total_demand() const;
  bool slot_adjacent(int left, int slot) const { return edge[left][slots[slot].root_index]; }
};

/// Frame of k covectors with srk = splitting rank of the entry. Demands are
/// n - srk for the first covector and 2 for the rest; with
/// legacy_first_demand_rank the first demand is r instead (the earlier
/// eigenvalue-matching frame shape).
MatchingInstance build_instance(const SymmetricSpaceEntry& entry,
                                const std::vector<Covector>& frame, long srk,
                                bool legacy_first_demand_rank = false);

struct MatchingOutcome {
  bool feasible = false;
  std::vector<std::vector<int>> assignment;  // per left node, slot indices
  std::vector<int> deficient;                // Hall-violating left subset when infeasible
};

/// Maximum bipartite matching with left-node demands (augmenting paths).
/// Infeasibility comes back as a deficient-set certificate, not an error.
/// Every feasible outcome is re-validated post hoc before being returned.
MatchingOutcome find_matching(const MatchingInstance& instance);

/// True iff the assignment meets every demand exactly, uses each slot at
/// most once, and respects adjacency.
bool assignment_valid(const MatchingInstance& instance, const MatchingOutcome& outcome);

/// Test oracle: the generalized Hall condition checked over every non-empty
/// left subset.
bool hall_condition_exhaustive(const MatchingInstance& instance);

/// Random covector frame with entries in [-3, 3], rejection-sampled until it
/// spans (exact integer rank test).
std::vector<Covector> random_spanning_frame(int rank, Rng& rng);

}  // namespace splitrank
