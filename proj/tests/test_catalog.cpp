#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "splitrank/catalog.hpp"

using namespace splitrank;

TEST_CASE("dimension: frozen table values") {
  // SL(4,R)/SO(4): A_3 all mult 1 -> 3 + 6
  auto sl4 = SymmetricSpaceEntry::make(FamilyTag::A, 3, MultiplicityMap::middle(1));
  CHECK(dimension(sl4) == 9);
  CHECK(sl4.name == "SL(4,R)/SO(4)");

  // SU(2,3): BC_2 with middle 2, short 2, double 1 -> 2 + 4 + 4 + 2 = 12
  auto su23 = SymmetricSpaceEntry::make(FamilyTag::BC, 2, MultiplicityMap::bc(2, 2, 1), 1);
  CHECK(dimension(su23) == 12);
  CHECK(su23.name == "SU(2,3)/S(U(2)xU(3))");

  // E8(C)/E8: 8 + 2 * 120 = 248
  auto e8c = SymmetricSpaceEntry::make(FamilyTag::E8, 8, MultiplicityMap::middle(2));
  CHECK(dimension(e8c) == 248);

  CHECK(dimension(SymmetricSpaceEntry::point()) == 0);
}

TEST_CASE("identify_component: frozen examples") {
  CHECK(identify_component({FamilyTag::A, 1}, MultiplicityMap::middle(1)) == "H^2");
  CHECK(identify_component({FamilyTag::A, 1}, MultiplicityMap::middle(8)) == "H^9");
  CHECK(identify_component({FamilyTag::A, 3}, MultiplicityMap::middle(1)) == "SL(4,R)/SO(4)");
  CHECK(identify_component({FamilyTag::A, 2}, MultiplicityMap::middle(8)) == "E6^{-26}/F4");
  CHECK(identify_component({FamilyTag::D, 3}, MultiplicityMap::middle(1)) == "SL(4,R)/SO(4)");
  CHECK(identify_component({FamilyTag::D, 3}, MultiplicityMap::middle(2)) == "SL(4,C)/SU(4)");
  CHECK(identify_component({FamilyTag::A, 5}, MultiplicityMap::middle(3)) == "unnamed");
}

TEST_CASE("identify_component: C_2 canonicalizes to B_2") {
  // Sp(2,R)/U(2) in C_2 coordinates is the B_2 space SO_0(2,3)
  CHECK(identify_component({FamilyTag::C, 2}, MultiplicityMap::long_short(1, 1)) ==
        "SO_0(2,3)/SO(2)xSO(3)");
  // SU(2,2) ~ SO_0(2,4)
  CHECK(identify_component({FamilyTag::C, 2}, MultiplicityMap::long_short(1, 2)) ==
        "SO_0(2,4)/SO(2)xSO(4)");
  // Sp(2,C) ~ SO(5,C)
  CHECK(identify_component({FamilyTag::C, 2}, MultiplicityMap::long_short(2, 2)) ==
        "SO(5,C)/SO(5)");
  // SO*(8) ~ SO_0(2,6)
  CHECK(identify_component({FamilyTag::C, 2}, MultiplicityMap::long_short(1, 4)) ==
        "SO_0(2,6)/SO(2)xSO(6)");
  // Sp(2,2) keeps its own name
  CHECK(identify_component({FamilyTag::C, 2}, MultiplicityMap::long_short(3, 4)) ==
        "Sp(2,2)/Sp(2)xSp(2)");
}

TEST_CASE("identify_component: parameter recovery and non-integral rejection") {
  CHECK(identify_component({FamilyTag::B, 5}, MultiplicityMap::long_short(1, 3)) ==
        "SO_0(5,8)/SO(5)xSO(8)");
  CHECK(identify_component({FamilyTag::BC, 3}, MultiplicityMap::bc(2, 6, 1)) ==
        "SU(3,6)/S(U(3)xU(6))");
  CHECK(identify_component({FamilyTag::BC, 3}, MultiplicityMap::bc(2, 5, 1)) == "unnamed");
  CHECK(identify_component({FamilyTag::BC, 3}, MultiplicityMap::bc(4, 8, 3)) ==
        "Sp(3,5)/Sp(3)xSp(5)");
  CHECK(identify_component({FamilyTag::BC, 3}, MultiplicityMap::bc(4, 4, 1)) == "SO*(14)/U(7)");
  CHECK(identify_component({FamilyTag::BC, 1}, MultiplicityMap::bc(0, 8, 1)) ==
        "SU(1,5)/S(U(1)xU(5))");
  CHECK(identify_component({FamilyTag::BC, 1}, MultiplicityMap::bc(0, 4, 3)) ==
        "Sp(1,2)/Sp(1)xSp(2)");
  CHECK(identify_component({FamilyTag::C, 3}, MultiplicityMap::long_short(1, 8)) ==
        "E7^{-25}/E6xU(1)");
  CHECK(identify_component({FamilyTag::C, 4}, MultiplicityMap::long_short(1, 8)) == "unnamed");
}

TEST_CASE("catalog: rank-2 slice contains the expected spaces") {
  auto entries = catalog_entries(2, 1);
  std::set<std::string> names;
  for (const auto& e : entries) names.insert(e.name);
  for (const char* expected :
       {"SL(3,R)/SO(3)", "SO_0(2,3)/SO(2)xSO(3)", "G2^2/SO(4)", "E6^{-26}/F4",
        "SU(2,3)/S(U(2)xU(3))", "E6^{-14}/Spin(10)xU(1)", "G2(C)/G2", "H^2", "H^9",
        "Sp(2,2)/Sp(2)xSp(2)", "SU(1,2)/S(U(1)xU(2))"})
    CHECK_MESSAGE(names.count(expected) == 1, expected);
  // nothing above rank 2, no unnamed entries
  for (const auto& e : entries) {
    CHECK(e.rank() <= 2);
    CHECK(e.name != "unnamed");
  }
}

TEST_CASE("catalog: exceptional rows all present at max_rank 8, even with max_k 0") {
  auto entries = catalog_entries(8, 0);
  for (const char* expected :
       {"E6^6/Sp(4)", "E6(C)/E6", "E7^7/SU(8)", "E7(C)/E7", "E8^8/SO(16)", "E8(C)/E8",
        "F4^4/Sp(3)xSp(1)", "E6^2/SU(6)xSp(1)", "E7^{-5}/SO(12)xSp(1)", "E8^{-24}/E7xSp(1)",
        "F4(C)/F4", "G2^2/SO(4)", "G2(C)/G2"})
    CHECK(find_entry(entries, expected) != nullptr);
  // max_k = 0 drops every k-parameterized family
  for (const auto& e : entries) CHECK_FALSE(e.param_k.has_value());
}

TEST_CASE("catalog: identify_component is the identity on canonical entries") {
  for (const auto& e : catalog_entries(8, 4))
    CHECK(identify_component(e.family, e.mults) == e.name);
}

TEST_CASE("catalog: no two entries share family, rank and multiplicities") {
  auto entries = catalog_entries(10, 6);
  std::map<std::tuple<int, int, int, int, int, int>, std::string> seen;
  for (const auto& e : entries) {
    auto key = std::make_tuple(static_cast<int>(e.family.tag), e.family.rank,
                               e.mults.of(OrbitClass::Middle), e.mults.of(OrbitClass::Long),
                               e.mults.of(OrbitClass::Short), e.mults.of(OrbitClass::Double));
    auto [it, inserted] = seen.emplace(key, e.name);
    CHECK_MESSAGE(inserted, e.name, " collides with ", it->second);
  }
}

TEST_CASE("catalog: dimension >= 2 rank for rank >= 2, >= 3 rank for rank >= 3") {
  for (const auto& e : catalog_entries(10, 6)) {
    if (e.rank() < 2) continue;
    CHECK(dimension(e) >= 2 * e.rank());
    if (e.rank() >= 3) CHECK(dimension(e) >= 3 * e.rank());
  }
}

TEST_CASE("find_entry and nearest_name") {
  auto entries = catalog_entries(8, 2);
  CHECK(find_entry(entries, "E8(C)/E8") != nullptr);
  CHECK(find_entry(entries, "E8(C)/E9") == nullptr);
  CHECK(nearest_name(entries, "E8(C)/E9") == "E8(C)/E8");
  CHECK(nearest_name(entries, "SL(5,R)/SO(6)") == "SL(5,R)/SO(5)");
}

TEST_CASE("catalog_entries validates max_rank") {
  CHECK_THROWS_AS(catalog_entries(0, 1), std::invalid_argument);
}
