#pragma once

#include <string>
#include <vector>

#include "splitrank/catalog.hpp"

namespace splitrank {

/// One connected component of a truncated diagram, re-identified as a space.
struct ComponentInfo {
  DynkinFamily family{FamilyTag::A, 1};
  MultiplicityMap mults;
  std::string name;
  std::vector<int> nodes;  // 0-based ambient node indices
};

/// Result of removing a set of simple roots: dim_total = dim(Y x R^k) where
/// k = |removed_nodes|.
struct TruncationResult {
  std::vector<int> removed_nodes;  // 0-based
  std::vector<ComponentInfo> components;
  long dim_Y = 0;
  long dim_total = 0;
};

/// Canonical product name of the truncated space: component names sorted and
/// joined with 'x'; "point" when nothing remains.
std::string truncation_name(const TruncationResult& t);

/// Connected components of the sub-diagram on `kept` nodes, classified back
/// to catalog spaces with their inherited multiplicities.
std::vector<ComponentInfo> classify_subdiagram(const RestrictedRootSystem& sys,
                                               const MultiplicityMap& ambient_mults,
                                               const std::vector<int>& kept);

/// One result per removed simple root i = 1..r.
std::vector<TruncationResult> truncations(const SymmetricSpaceEntry& entry);

struct SplittingRankResult {
  long srk = 0;
  std::vector<TruncationResult> maximizers;
};

/// srk(X): maximal dim(Y x R) over single-node truncations; ties reported.
SplittingRankResult splitting_rank(const SymmetricSpaceEntry& entry);

/// srk^k(X) over (r-k)-subsets of simple roots (standard parabolics).
SplittingRankResult splitting_rank_k(const SymmetricSpaceEntry& entry, int k);

/// Independent brute-force oracle for srk^k: maximizes r + sum of
/// multiplicities over ALL span-closed root subsets of rank <= r-k, not just
/// the standard parabolic ones. Refuses ranks above `rank_bound`.
long oracle_splitting_rank_k(const SymmetricSpaceEntry& entry, int k, int rank_bound = 5);

/// The vector (srk^0, ..., srk^r) together with splitting indices.
struct SplitRankProfile {
  std::vector<long> values;  // values[k] = srk^k, values[0] = n
  std::vector<long> si;      // si[k] = n - values[k]
  int rank() const { return static_cast<int>(values.size()) - 1; }
  long n() const { return values.front(); }
};

SplitRankProfile profile(const SymmetricSpaceEntry& entry);

struct GapResult {
  bool has_gap = false;  // false: all truncations tie, no second value
  long gap = 0;
  std::vector<TruncationResult> second_maximizers;
};

/// Dimension gap between the best and second-best distinct single-node
/// truncations. Requires rank >= 2.
GapResult gap_table(const SymmetricSpaceEntry& entry);

/// The four spaces where the k-srk inequality fails at k = r; together with
/// H^2 they are also the excluded product factors. Sp(2,R)/U(2) appears
/// under its canonical B_2 name.
const std::vector<std::string>& ksrk_exception_names();

struct KsrkCheck {
  int k = 0;
  long srk_k = 0;
  long bound = 0;  // srk - 2(k-1)
  bool pass = false;
  bool known_exception = false;  // k == r on one of the four excluded spaces
};

struct KsrkReport {
  std::string space;
  long srk = 0;
  std::vector<KsrkCheck> checks;
  /// True when every check passes except known exceptions, which must fail.
  bool ok() const;
};

KsrkReport verify_k_srk_inequality(const SymmetricSpaceEntry& entry);

}  // namespace splitrank
