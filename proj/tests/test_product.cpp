#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "splitrank/product.hpp"
#include "splitrank/rng.hpp"

using namespace splitrank;

namespace {

SymmetricSpaceEntry sl5() {
  return SymmetricSpaceEntry::make(FamilyTag::A, 4, MultiplicityMap::middle(1));
}
SymmetricSpaceEntry h2() {
  return SymmetricSpaceEntry::make(FamilyTag::A, 1, MultiplicityMap::middle(1));
}
SymmetricSpaceEntry e8() {
  return SymmetricSpaceEntry::make(FamilyTag::E8, 8, MultiplicityMap::middle(1));
}

std::vector<long> random_si_profile(Rng& rng) {
  // a valid si-profile: si[0] = 0, strictly increasing afterwards
  int r = static_cast<int>(rng.uniform(1, 5));
  std::vector<long> si{0};
  long v = 0;
  for (int k = 1; k <= r; ++k) {
    v += rng.uniform(1, 6);
    si.push_back(v);
  }
  return si;
}

}  // namespace

TEST_CASE("min_plus_convolve basics") {
  CHECK(min_plus_convolve({0, 4, 7}, {0}) == std::vector<long>{0, 4, 7});
  CHECK(min_plus_convolve({0, 4, 7}, {0, 1}) == std::vector<long>{0, 1, 5, 8});
  CHECK_THROWS_AS(min_plus_convolve({}, {0}), std::invalid_argument);
}

TEST_CASE("min_plus_convolve is commutative and associative on random triples") {
  Rng rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_si_profile(rng);
    auto b = random_si_profile(rng);
    auto c = random_si_profile(rng);
    CHECK(min_plus_convolve(a, b) == min_plus_convolve(b, a));
    CHECK(min_plus_convolve(min_plus_convolve(a, b), c) ==
          min_plus_convolve(a, min_plus_convolve(b, c)));
  }
}

TEST_CASE("single factor profile equals the irreducible profile") {
  ProductSpace p({sl5()});
  auto pp = si_profile(p);
  auto direct = profile(sl5());
  CHECK(pp.profile.values == direct.values);
  CHECK(pp.profile.si == direct.si);
}

TEST_CASE("SL(5,R) x SL(5,R): frozen min-plus values") {
  auto single = profile(sl5());
  CHECK(single.si[1] == 4);
  CHECK(single.si[2] == 7);

  ProductSpace p({sl5(), sl5()});
  CHECK(p.rank() == 8);
  CHECK(p.dim() == 28);
  auto pp = si_profile(p);
  // si^1 = min(4, 4) = 4; si^2 = min(7, 4+4) = 7
  CHECK(pp.profile.si[0] == 0);
  CHECK(pp.profile.si[1] == 4);
  CHECK(pp.profile.si[2] == 7);
  // srk(X1 x X2) = max(srk1 + n2, srk2 + n1) = 10 + 14
  CHECK(pp.profile.values[1] == 24);
  CHECK(pp.profile.si.back() == p.dim() - p.rank());
}

TEST_CASE("k=1 max formula on mixed products") {
  auto e6 = SymmetricSpaceEntry::make(FamilyTag::E6, 6, MultiplicityMap::middle(1));
  ProductSpace p({sl5(), e6});
  auto pp = si_profile(p);
  long srk1 = profile(sl5()).values[1], n1 = dimension(sl5());
  long srk2 = profile(e6).values[1], n2 = dimension(e6);
  CHECK(pp.profile.values[1] == std::max(srk1 + n2, srk2 + n1));
}

TEST_CASE("witness compositions sum to k and attain the min") {
  ProductSpace ok({sl5(), e8()});
  auto pp = si_profile(ok);
  for (std::size_t k = 0; k < pp.profile.si.size(); ++k) {
    const auto& w = pp.witness[k];
    REQUIRE(w.size() == ok.factors.size());
    int total = 0;
    long value = 0;
    for (std::size_t f = 0; f < w.size(); ++f) {
      total += w[f];
      value += irreducible_profile(ok.factors[f]).si[static_cast<std::size_t>(w[f])];
    }
    CHECK(total == static_cast<int>(k));
    CHECK(value == pp.profile.si[k]);
  }
}

TEST_CASE("si_profile fold agrees with direct min-plus convolution of factor profiles") {
  Rng rng(301);
  auto pool = catalog_entries(6, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<SymmetricSpaceEntry> factors;
    for (int i = 0; i < 3; ++i)
      factors.push_back(
          pool[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pool.size()) - 1))]);
    ProductSpace p(factors);
    auto a = irreducible_profile(p.factors[0]).si;
    auto b = irreducible_profile(p.factors[1]).si;
    auto c = irreducible_profile(p.factors[2]).si;
    auto left = min_plus_convolve(min_plus_convolve(a, b), c);
    auto right = min_plus_convolve(a, min_plus_convolve(b, c));
    CHECK(left == right);
    CHECK(si_profile(p).profile.si == left);
  }
}

TEST_CASE("si endpoints: si[0]=0 and si[rank]=dim-rank") {
  Rng rng(7);
  auto pool = catalog_entries(5, 2);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<SymmetricSpaceEntry> factors;
    int s = static_cast<int>(rng.uniform(1, 3));
    for (int i = 0; i < s; ++i)
      factors.push_back(
          pool[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pool.size()) - 1))]);
    ProductSpace p(std::move(factors));
    auto pp = si_profile(p);
    CHECK(pp.profile.si.front() == 0);
    CHECK(pp.profile.si.back() == p.dim() - p.rank());
  }
}

TEST_CASE("forbidden factors flagged with witness, across canonical aliases") {
  ProductSpace with_h2({h2(), e8()});
  auto witness = forbidden_factor(with_h2);
  REQUIRE(witness.has_value());
  CHECK(*witness == "H^2");

  CHECK_FALSE(forbidden_factor(ProductSpace({sl5()})).has_value());

  // Sp(2,R)/U(2) built in C_2 coordinates still trips the check
  auto sp2r = SymmetricSpaceEntry::make(FamilyTag::C, 2, MultiplicityMap::long_short(1, 1));
  auto w2 = forbidden_factor(ProductSpace({sp2r}));
  REQUIRE(w2.has_value());
  CHECK(*w2 == "SO_0(2,3)/SO(2)xSO(3)");
}

TEST_CASE("verify_product_bound: single admissible factor reduces to the k-srk check") {
  ProductSpace p({sl5()});
  auto report = verify_product_bound(p);
  CHECK(report.ok);
  auto kreport = verify_k_srk_inequality(sl5());
  REQUIRE(report.checks.size() == kreport.checks.size());
  for (std::size_t i = 0; i < report.checks.size(); ++i)
    CHECK(report.checks[i].pass == kreport.checks[i].pass);
}

TEST_CASE("verify_product_bound: SL(5,R) x SL(5,R) passes all k") {
  auto report = verify_product_bound(ProductSpace({sl5(), sl5()}));
  CHECK(report.ok);
  CHECK(report.checks.size() == 8);
}

TEST_CASE("verify_product_bound refuses forbidden factors") {
  CHECK_THROWS_AS(verify_product_bound(ProductSpace({h2(), e8()})), std::invalid_argument);
}

TEST_CASE("factor order is canonicalized") {
  ProductSpace a({sl5(), e8()});
  ProductSpace b({e8(), sl5()});
  CHECK(a.name() == b.name());
  auto pa = si_profile(a), pb = si_profile(b);
  CHECK(pa.profile.si == pb.profile.si);
  CHECK(pa.witness == pb.witness);
}

TEST_CASE("rank-1 factors carry profile (n, 1)") {
  auto h9 = SymmetricSpaceEntry::make(FamilyTag::A, 1, MultiplicityMap::middle(8));
  auto p = irreducible_profile(h9);
  CHECK(p.values == std::vector<long>{9, 1});
  CHECK(p.si == std::vector<long>{0, 8});
}
