#pragma once

#include <set>
#include <string>
#include <vector>

#include "splitrank/linalg.hpp"
#include "splitrank/rational.hpp"

namespace splitrank {

enum class FamilyTag { A, B, C, D, BC, E6, E7, E8, F4, G2 };

std::string to_string(FamilyTag tag);
FamilyTag family_tag_from_string(const std::string& s);

/// Weyl-orbit length class of a restricted root. Simply-laced families use
/// Middle only; B/C/F4/G2 use Long/Short; BC uses Middle/Short/Double where
/// each Double root is exactly twice a Short one.
enum class OrbitClass { Middle, Long, Short, Double };

std::string to_string(OrbitClass cls);

/// A Cartan family at a fixed rank. Rank constraints are enforced at
/// construction: A>=1, B>=2, C>=2, D>=3, BC>=1, exceptional ranks fixed.
struct DynkinFamily {
  FamilyTag tag;
  int rank;

  DynkinFamily(FamilyTag t, int r);
  std::string str() const;

  friend bool operator==(const DynkinFamily& a, const DynkinFamily& b) {
    return a.tag == b.tag && a.rank == b.rank;
  }
};

/// A positive root in the simple-root integer basis.
struct Root {
  IntVec coeffs;
  OrbitClass cls;
};

bool lex_less(const IntVec& a, const IntVec& b);

/// A tangent vector of the flat, recorded by the exact rational values the
/// simple roots take on it. Root evaluation is then an integer-rational dot
/// product.
struct Covector {
  RatVec values;

  static Covector from_ints(const std::vector<IntScalar>& entries);
};

class RestrictedRootSystem {
 public:
  RestrictedRootSystem(DynkinFamily family, std::vector<Root> positive, IntMat cartan);

  const DynkinFamily& family() const { return family_; }
  int rank() const { return family_.rank; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  const IntMat& cartan_matrix() const { return cartan_; }

  bool adjacent(int i, int j) const { return i != j && cartan_(i, j) != 0; }

  /// Index of the simple root alpha_i (0-based node index) in positive_roots.
  int simple_root_index(int node) const { return simple_index_[node]; }
  OrbitClass node_class(int node) const { return positive_[simple_index_[node]].cls; }

  /// Positive-root count per orbit class.
  std::array<int, 4> class_counts() const;

 private:
  DynkinFamily family_;
  std::vector<Root> positive_;
  IntMat cartan_;
  std::vector<int> simple_index_;
};

/// Builds the full positive system for the family: closed-form root lists for
/// A/B/C/D/BC, reflection closure from the Cartan matrix for E6/E7/E8/F4/G2.
/// Roots come out sorted lexicographically by coefficient vector.
RestrictedRootSystem build_root_system(const DynkinFamily& family);

/// Shared, lazily-built root systems (immutable after construction, safe for
/// concurrent readers).
const RestrictedRootSystem& shared_root_system(const DynkinFamily& family);

/// Exact value of the root on the covector.
Rational evaluate(const Root& root, const Covector& v);

/// All positive roots lying in the rational span of the generators.
/// Generators must be positive roots of the system.
std::vector<Root> span_closure(const RestrictedRootSystem& sys, const std::vector<Root>& generators);

/// All positive roots vanishing on every covector of vs (vs non-empty).
std::vector<Root> vanishing_subsystem(const RestrictedRootSystem& sys,
                                      const std::vector<Covector>& vs);

/// Positive roots supported entirely on the given simple-root nodes. Equals
/// span_closure of those simple roots (coefficients live in the simple
/// basis), but needs no elimination.
std::vector<Root> support_closure(const RestrictedRootSystem& sys, const std::vector<int>& nodes);

/// Test oracle: regenerates the positive system by reflection closure from
/// the Cartan matrix alone, propagating orbit classes along reflections.
std::vector<Root> reflection_closure_positive(const IntMat& cartan,
                                              const std::vector<OrbitClass>& simple_classes);

}  // namespace splitrank
