#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "splitrank/rng.hpp"
#include "splitrank/split_rank.hpp"

using namespace splitrank;

namespace {

SymmetricSpaceEntry sl_r(int rank) {  // SL(rank+1,R)/SO(rank+1)
  return SymmetricSpaceEntry::make(FamilyTag::A, rank, MultiplicityMap::middle(1));
}

std::set<std::string> maximizer_names(const std::vector<TruncationResult>& ts) {
  std::set<std::string> names;
  for (const auto& t : ts) names.insert(truncation_name(t));
  return names;
}

}  // namespace

TEST_CASE("truncations of SL(r+1,R): codimension -i^2+(r+1)i, components split as expected") {
  for (int r = 2; r <= 7; ++r) {
    auto entry = sl_r(r);
    long n = dimension(entry);
    auto ts = truncations(entry);
    REQUIRE(ts.size() == static_cast<std::size_t>(r));
    for (int i = 1; i <= r; ++i) {
      const auto& t = ts[static_cast<std::size_t>(i - 1)];
      CHECK(n - t.dim_total == -static_cast<long>(i) * i + (r + 1) * static_cast<long>(i));
      // components: SL(i,R) x SL(r-i+1,R), degenerating to a point at the ends
      std::size_t expected_components = (i == 1 ? 0 : 1) + (i == r ? 0 : 1);
      CHECK(t.components.size() == expected_components);
      long component_dim_sum = 0;
      for (const auto& c : t.components)
        component_dim_sum += dimension(SymmetricSpaceEntry::make(c.family.tag, c.family.rank, c.mults));
      CHECK(component_dim_sum == t.dim_Y);
    }
  }
}

TEST_CASE("truncations of Sp(r,C): codimension -3i^2+(4r+1)i") {
  for (int r = 3; r <= 7; ++r) {
    auto entry = SymmetricSpaceEntry::make(FamilyTag::C, r, MultiplicityMap::long_short(2, 2));
    long n = dimension(entry);
    auto ts = truncations(entry);
    for (int i = 1; i <= r; ++i)
      CHECK(n - ts[static_cast<std::size_t>(i - 1)].dim_total ==
            -3L * i * i + (4L * r + 1) * i);
  }
}

TEST_CASE("truncation of a rank-1 space leaves a point") {
  auto h5 = SymmetricSpaceEntry::make(FamilyTag::A, 1, MultiplicityMap::middle(4));
  auto ts = truncations(h5);
  REQUIRE(ts.size() == 1);
  CHECK(ts[0].components.empty());
  CHECK(ts[0].dim_Y == 0);
  CHECK(ts[0].dim_total == 1);
  CHECK(truncation_name(ts[0]) == "point");
  CHECK(splitting_rank(h5).srk == 1);
}

TEST_CASE("splitting rank: E6^6/Sp(4) -> 26 via SO_0(5,5)") {
  auto entry = SymmetricSpaceEntry::make(FamilyTag::E6, 6, MultiplicityMap::middle(1));
  auto res = splitting_rank(entry);
  CHECK(res.srk == 26);
  CHECK(maximizer_names(res.maximizers) == std::set<std::string>{"SO_0(5,5)/SO(5)xSO(5)"});
  // two nodes attain it (the two fork ends of the diagram)
  CHECK(res.maximizers.size() == 2);
}

TEST_CASE("splitting rank: SO*(12)/U(6) -> 15 via SU*(6)/Sp(3)") {
  auto entry = SymmetricSpaceEntry::make(FamilyTag::C, 3, MultiplicityMap::long_short(1, 4));
  auto res = splitting_rank(entry);
  CHECK(res.srk == 15);
  CHECK(maximizer_names(res.maximizers) == std::set<std::string>{"SU*(6)/Sp(3)"});
}

TEST_CASE("splitting rank: F4^4 -> 13 with two distinct maximizers") {
  auto entry = SymmetricSpaceEntry::make(FamilyTag::F4, 4, MultiplicityMap::long_short(1, 1));
  auto res = splitting_rank(entry);
  CHECK(res.srk == 13);
  CHECK(maximizer_names(res.maximizers) ==
        std::set<std::string>{"SO_0(3,4)/SO(3)xSO(4)", "Sp(3,R)/U(3)"});
}

TEST_CASE("splitting rank: SL(3,R)/SO(3) -> 3 = n - r") {
  auto res = splitting_rank(sl_r(2));
  CHECK(res.srk == 3);
  CHECK(dimension(sl_r(2)) - 2 == 3);
}

TEST_CASE("splitting rank: E7 truncation dimensions match the case list") {
  // E7^7/SU(8): removing nodes 1..7 gives dims 37,23,17,28,20,28,43
  auto entry = SymmetricSpaceEntry::make(FamilyTag::E7, 7, MultiplicityMap::middle(1));
  auto ts = truncations(entry);
  std::vector<long> dims;
  for (const auto& t : ts) dims.push_back(t.dim_total);
  CHECK(dims == std::vector<long>{37, 23, 17, 28, 20, 28, 43});
  CHECK(splitting_rank(entry).srk == 43);
}

TEST_CASE("splitting_rank_k: SL(5,R) frozen profile") {
  auto entry = sl_r(4);
  CHECK(splitting_rank_k(entry, 0).srk == 14);
  CHECK(splitting_rank_k(entry, 1).srk == 10);
  // derived by brute-force enumeration (oracle below): best 2-subset is an
  // adjacent pair, 4 + 3 = 7
  CHECK(splitting_rank_k(entry, 2).srk == 7);
  CHECK(splitting_rank_k(entry, 4).srk == 4);
  CHECK_THROWS_AS(splitting_rank_k(entry, 5), std::invalid_argument);
  CHECK_THROWS_AS(splitting_rank_k(entry, -1), std::invalid_argument);
}

TEST_CASE("splitting_rank_k maximizers report removed nodes and components") {
  auto entry = sl_r(4);
  auto res = splitting_rank_k(entry, 2);
  CHECK(res.srk == 7);
  for (const auto& t : res.maximizers) {
    CHECK(t.removed_nodes.size() == 2);
    CHECK(t.dim_total == 7);
  }
  // best kept pairs are the three adjacent ones
  CHECK(res.maximizers.size() == 3);
}

TEST_CASE("oracle equals subset method: SL(5,R) k=2 -> 7") {
  auto entry = sl_r(4);
  CHECK(oracle_splitting_rank_k(entry, 2) == 7);
  CHECK(oracle_splitting_rank_k(entry, 2) == splitting_rank_k(entry, 2).srk);
}

TEST_CASE("oracle: k=r admits only the empty subsystem") {
  for (auto entry :
       {sl_r(3), SymmetricSpaceEntry::make(FamilyTag::BC, 2, MultiplicityMap::bc(6, 8, 1))}) {
    CHECK(oracle_splitting_rank_k(entry, entry.rank()) == entry.rank());
  }
}

TEST_CASE("oracle refuses ranks above the bound") {
  auto entry = SymmetricSpaceEntry::make(FamilyTag::E6, 6, MultiplicityMap::middle(1));
  CHECK_THROWS_AS(oracle_splitting_rank_k(entry, 1), std::invalid_argument);
  CHECK_NOTHROW(oracle_splitting_rank_k(entry, 6, 6));
}

TEST_CASE("oracle equivalence across all F4-type entries, all k") {
  for (int sht : {1, 2, 4, 8}) {
    auto entry =
        SymmetricSpaceEntry::make(FamilyTag::F4, 4, MultiplicityMap::long_short(1, sht));
    for (int k = 1; k <= 4; ++k)
      CHECK(oracle_splitting_rank_k(entry, k) == splitting_rank_k(entry, k).srk);
  }
  auto f4c = SymmetricSpaceEntry::make(FamilyTag::F4, 4, MultiplicityMap::long_short(2, 2));
  for (int k = 1; k <= 4; ++k)
    CHECK(oracle_splitting_rank_k(f4c, k) == splitting_rank_k(f4c, k).srk);
}

TEST_CASE("exact-size subset maximization equals <=-size maximization") {
  // adding a node never decreases the weighted closure size, so the max over
  // subsets of size exactly r-k equals the max over size <= r-k; check by
  // direct enumeration over all subset sizes
  for (auto entry : {SymmetricSpaceEntry::make(FamilyTag::BC, 3, MultiplicityMap::bc(2, 4, 1)),
                     SymmetricSpaceEntry::make(FamilyTag::B, 4, MultiplicityMap::long_short(1, 2))}) {
    const int r = entry.rank();
    const auto& sys = shared_root_system(entry.family);
    for (int k = 1; k <= r; ++k) {
      long best_le = r;  // empty subset value
      for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<int> kept;
        for (int i = 0; i < r; ++i)
          if (mask & (1u << i)) kept.push_back(i);
        if (static_cast<int>(kept.size()) > r - k) continue;
        long value = r;
        for (const Root& beta : support_closure(sys, kept)) value += entry.mults.of(beta.cls);
        best_le = std::max(best_le, value);
      }
      CHECK(best_le == splitting_rank_k(entry, k).srk);
    }
  }
}

TEST_CASE("random vanishing subsystems never beat srk^k") {
  // any k independent covectors give a split submanifold of dimension
  // r + weighted vanishing set, so that value lower-bounds srk^k
  Rng rng(77);
  for (auto entry :
       {SymmetricSpaceEntry::make(FamilyTag::E6, 6, MultiplicityMap::middle(1)),
        SymmetricSpaceEntry::make(FamilyTag::BC, 4, MultiplicityMap::bc(2, 4, 1)),
        SymmetricSpaceEntry::make(FamilyTag::F4, 4, MultiplicityMap::long_short(1, 8))}) {
    const auto& sys = shared_root_system(entry.family);
    const int r = entry.rank();
    auto p = profile(entry);
    for (int trial = 0; trial < 60; ++trial) {
      int k = static_cast<int>(rng.uniform(1, r));
      std::vector<Covector> vs;
      IntMat m(k, r);
      for (int i = 0; i < k; ++i) {
        std::vector<IntScalar> entries;
        for (int j = 0; j < r; ++j) entries.push_back(rng.uniform(-3, 3));
        for (int j = 0; j < r; ++j) m(i, j) = entries[static_cast<std::size_t>(j)];
        vs.push_back(Covector::from_ints(entries));
      }
      if (row_space_rank(m) != k) continue;  // need a genuine R^k factor
      long value = r;
      for (const Root& beta : vanishing_subsystem(sys, vs)) value += entry.mults.of(beta.cls);
      CHECK(value <= p.values[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("profile: endpoints and strict decrease") {
  for (auto entry : {sl_r(4), SymmetricSpaceEntry::make(FamilyTag::F4, 4, MultiplicityMap::long_short(1, 1)),
                     SymmetricSpaceEntry::make(FamilyTag::BC, 2, MultiplicityMap::bc(6, 8, 1))}) {
    auto p = profile(entry);
    CHECK(p.values.front() == dimension(entry));
    CHECK(p.values.back() == entry.rank());
    for (std::size_t k = 0; k + 1 < p.values.size(); ++k) CHECK(p.values[k + 1] < p.values[k]);
    for (std::size_t k = 0; k < p.values.size(); ++k) CHECK(p.si[k] == p.n() - p.values[k]);
  }
}

TEST_CASE("gap_table frozen values") {
  auto e8 = SymmetricSpaceEntry::make(FamilyTag::E8, 8, MultiplicityMap::middle(1));
  auto g = gap_table(e8);
  REQUIRE(g.has_gap);
  CHECK(g.gap == 21);
  CHECK(maximizer_names(g.second_maximizers) == std::set<std::string>{"SO_0(7,7)/SO(7)xSO(7)"});

  auto so55 = SymmetricSpaceEntry::make(FamilyTag::D, 5, MultiplicityMap::middle(1));
  g = gap_table(so55);
  REQUIRE(g.has_gap);
  CHECK(g.gap == 2);
  CHECK(maximizer_names(g.second_maximizers) == std::set<std::string>{"SL(5,R)/SO(5)"});

  auto sp5 = SymmetricSpaceEntry::make(FamilyTag::C, 5, MultiplicityMap::long_short(1, 1));
  g = gap_table(sp5);
  REQUIRE(g.has_gap);
  CHECK(g.gap == 6);
  CHECK(maximizer_names(g.second_maximizers) ==
        std::set<std::string>{"H^2xSp(3,R)/U(3)", "SL(5,R)/SO(5)"});
}

TEST_CASE("gap_table: no second value reported explicitly") {
  // G2-type spaces: both truncations give H^2 x R of dimension 3
  auto g2 = SymmetricSpaceEntry::make(FamilyTag::G2, 2, MultiplicityMap::long_short(1, 1));
  auto g = gap_table(g2);
  CHECK_FALSE(g.has_gap);
  // A_2 with multiplicity 8: both truncations give H^9
  auto e626 = SymmetricSpaceEntry::make(FamilyTag::A, 2, MultiplicityMap::middle(8));
  CHECK_FALSE(gap_table(e626).has_gap);
  CHECK_THROWS_AS(gap_table(SymmetricSpaceEntry::make(FamilyTag::A, 1, MultiplicityMap::middle(1))),
                  std::invalid_argument);
}

TEST_CASE("verify_k_srk_inequality: the four known exceptions fail exactly at k=r") {
  auto sp2r = SymmetricSpaceEntry::make(FamilyTag::C, 2, MultiplicityMap::long_short(1, 1));
  auto report = verify_k_srk_inequality(sp2r);
  CHECK(report.space == "SO_0(2,3)/SO(2)xSO(3)");
  CHECK(report.srk == 3);
  REQUIRE(report.checks.size() == 2);
  CHECK(report.checks[0].pass);
  CHECK_FALSE(report.checks[1].pass);  // srk^2 = 2 > 3 - 2 = 1
  CHECK(report.checks[1].known_exception);
  CHECK(report.ok());

  auto sl4 = sl_r(3);
  report = verify_k_srk_inequality(sl4);
  CHECK(report.srk == 6);
  CHECK(report.checks[0].pass);
  CHECK(report.checks[1].pass);
  CHECK_FALSE(report.checks[2].pass);  // k = 3 needs srk >= 7
  CHECK(report.checks[2].known_exception);
  CHECK(report.ok());
}

TEST_CASE("verify_k_srk_inequality: E8(C)/E8 passes for all k") {
  auto entry = SymmetricSpaceEntry::make(FamilyTag::E8, 8, MultiplicityMap::middle(2));
  auto report = verify_k_srk_inequality(entry);
  for (const auto& c : report.checks) {
    CHECK(c.pass);
    CHECK_FALSE(c.known_exception);
  }
  CHECK(report.ok());
}

TEST_CASE("maximizers of irreducible rank >= 2 entries are irreducible (catalog sweep)") {
  for (const auto& entry : catalog_entries(8, 4)) {
    if (entry.rank() < 2) continue;
    for (const auto& t : splitting_rank(entry).maximizers)
      CHECK_MESSAGE(t.components.size() == 1, entry.name);
  }
}

TEST_CASE("gap property: sub-maximal truncations are irreducible or at least r-2 below") {
  for (const auto& entry : catalog_entries(8, 4)) {
    const int r = entry.rank();
    if (r < 3) continue;
    long srk = splitting_rank(entry).srk;
    for (const auto& t : truncations(entry)) {
      if (t.dim_total >= srk) continue;
      bool irreducible = t.components.size() == 1;
      CHECK_MESSAGE((irreducible || srk - t.dim_total >= r - 2), entry.name);
    }
  }
}
