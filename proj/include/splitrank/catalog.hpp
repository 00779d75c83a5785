#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitrank/root_system.hpp"

namespace splitrank {

/// Per-orbit-class root-space multiplicities. Classes the family does not
/// have are held at zero (normalize_diagram enforces that).
class MultiplicityMap {
 public:
  int of(OrbitClass c) const { return m_[static_cast<std::size_t>(c)]; }
  MultiplicityMap& set(OrbitClass c, int v) {
    m_[static_cast<std::size_t>(c)] = v;
    return *this;
  }

  static MultiplicityMap middle(int m) { return MultiplicityMap().set(OrbitClass::Middle, m); }
  static MultiplicityMap long_short(int l, int s) {
    return MultiplicityMap().set(OrbitClass::Long, l).set(OrbitClass::Short, s);
  }
  static MultiplicityMap bc(int mid, int sh, int dbl) {
    return MultiplicityMap()
        .set(OrbitClass::Middle, mid)
        .set(OrbitClass::Short, sh)
        .set(OrbitClass::Double, dbl);
  }

  friend bool operator==(const MultiplicityMap& a, const MultiplicityMap& b) {
    return a.m_ == b.m_;
  }
  friend bool operator!=(const MultiplicityMap& a, const MultiplicityMap& b) { return !(a == b); }

 private:
  std::array<int, 4> m_{};
};

/// One irreducible symmetric space of non-compact type (or the degenerate
/// point left by truncating a rank-1 diagram).
struct SymmetricSpaceEntry {
  std::string name;
  DynkinFamily family{FamilyTag::A, 1};
  MultiplicityMap mults;
  std::optional<int> param_k;
  bool is_point = false;

  static SymmetricSpaceEntry point();
  /// Normalizes the diagram, derives the canonical name, keeps param_k.
  static SymmetricSpaceEntry make(FamilyTag tag, int rank, MultiplicityMap mults,
                                  std::optional<int> param_k = std::nullopt);

  int rank() const { return is_point ? 0 : family.rank; }
};

/// dim X = rank + sum over positive roots of the class multiplicity.
long dimension(const SymmetricSpaceEntry& entry);

/// Canonicalizes a diagram under the isomorphisms the tables use silently:
/// C_2 -> B_2, D_3 -> A_3; multiplicities of absent classes are zeroed.
std::pair<DynkinFamily, MultiplicityMap> normalize_diagram(const DynkinFamily& family,
                                                           const MultiplicityMap& mults);

/// Canonical catalog name of the (normalized) diagram, "unnamed" when no
/// catalog row matches. A_1 with multiplicity m names H^{m+1}.
std::string identify_component(const DynkinFamily& family, const MultiplicityMap& mults);

/// Parameterized table rows: the instantiation guards and entry factories.
struct CatalogRow {
  std::string label;  // row headline at generic rank, used in verification reports
  int min_rank;
  int max_rank;  // 0 = unbounded (clipped by the caller's max_rank)
  bool has_k;
  std::function<SymmetricSpaceEntry(int r, int k)> make;
};

const std::vector<CatalogRow>& catalog_rows();

/// Every table row instantiated over its admissible (r, k) within bounds,
/// plus the rank-1 hyperbolic spaces H^m. Deduplicated by canonical name.
std::vector<SymmetricSpaceEntry> catalog_entries(int max_rank, int max_param_k);

const SymmetricSpaceEntry* find_entry(const std::vector<SymmetricSpaceEntry>& catalog,
                                      const std::string& name);
std::string nearest_name(const std::vector<SymmetricSpaceEntry>& catalog,
                         const std::string& name);

}  // namespace splitrank
