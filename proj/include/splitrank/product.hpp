#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitrank/split_rank.hpp"

namespace splitrank {

/// Min-plus (tropical) convolution of splitting-index profiles:
/// out[k] = min over i+j=k of a[i] + b[j].
std::vector<long> min_plus_convolve(const std::vector<long>& a, const std::vector<long>& b);

/// An ordered multiset of irreducible factors; factor order is canonicalized
/// (sorted by name) so equal products compare equal.
struct ProductSpace {
  std::vector<SymmetricSpaceEntry> factors;

  explicit ProductSpace(std::vector<SymmetricSpaceEntry> fs);
  int rank() const;
  long dim() const;
  std::string name() const;  // factor names joined with " x "
};

/// Profile of one irreducible factor, memoized by canonical name.
const SplitRankProfile& irreducible_profile(const SymmetricSpaceEntry& entry);

struct ProductProfile {
  SplitRankProfile profile;
  /// witness[k] = the composition (j_1, ..., j_s) over the canonicalized
  /// factor order attaining si[k]; lexicographically smallest on ties.
  std::vector<std::vector<int>> witness;
};

/// Min-plus fold of the factor si-profiles.
ProductProfile si_profile(const ProductSpace& p);

/// The five spaces excluded as direct factors by the product
/// splitting-index bound.
const std::vector<std::string>& forbidden_factor_names();

/// Canonical name of the first forbidden factor, if any.
std::optional<std::string> forbidden_factor(const ProductSpace& p);

struct ProductBoundCheck {
  int k = 0;
  long si_k = 0;
  long bound = 0;  // si^1 + 2(k-1)
  bool pass = false;
  std::vector<int> witness;
};

struct ProductBoundReport {
  std::string space;
  std::vector<ProductBoundCheck> checks;
  bool ok = false;
};

/// Checks si^k >= si^1 + 2(k-1) for 1 <= k <= rank. Throws
/// std::invalid_argument when the product has a forbidden factor.
ProductBoundReport verify_product_bound(const ProductSpace& p);

}  // namespace splitrank
