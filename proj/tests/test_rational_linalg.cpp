#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "splitrank/linalg.hpp"
#include "splitrank/rational.hpp"
#include "splitrank/rng.hpp"

using namespace splitrank;

TEST_CASE("rational arithmetic is exact and normalized") {
  Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK((Rational(1, 3) + Rational(2, 3)).den() == 1);
  CHECK(Rational(7, 3) > Rational(2));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("-5") == Rational(-5));
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK_THROWS_AS(Rational::parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
}

TEST_CASE("integer row span: rank, membership, idempotence") {
  IntRowSpan span(3);
  IntVec v1(3), v2(3), v3(3);
  v1 << 1, 0, 0;
  v2 << 0, 1, 0;
  v3 << 2, 3, 0;
  CHECK(span.insert(v1));
  CHECK(span.insert(v2));
  CHECK_FALSE(span.insert(v3));  // already in span
  CHECK(span.rank() == 2);
  CHECK(span.contains(v3));
  IntVec v4(3);
  v4 << 0, 0, 5;
  CHECK_FALSE(span.contains(v4));
  CHECK(span.insert(v4));
  CHECK(span.rank() == 3);
}

TEST_CASE("row_space_rank on Eigen expressions") {
  IntMat m(3, 3);
  m << 1, 2, 3, 2, 4, 6, 1, 1, 1;
  CHECK(row_space_rank(m) == 2);
  CHECK(row_space_rank(m.topRows(2)) == 1);
  CHECK(row_space_rank(IntMat::Identity(4, 4)) == 4);
  CHECK(row_space_rank(IntMat::Zero(2, 5)) == 0);
}

TEST_CASE("rational rank") {
  RatMat m(2, 2);
  m << Rational(1, 2), Rational(1, 3), Rational(3, 2), Rational(2);
  CHECK(rational_rank(m) == 2);
  m(1, 0) = Rational(3, 2);
  m(1, 1) = Rational(1);  // row1 = 3 * row0
  CHECK(rational_rank(m) == 1);
}

TEST_CASE("random integer matrices: fraction-free rank agrees with rational rank") {
  Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = static_cast<int>(rng.uniform(1, 6));
    int cols = static_cast<int>(rng.uniform(1, 6));
    IntMat m(rows, cols);
    RatMat q(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        m(i, j) = rng.uniform(-4, 4);
        q(i, j) = Rational(m(i, j));
      }
    CHECK(row_space_rank(m) == rational_rank(q));
  }
}

TEST_CASE("rng streams are deterministic") {
  Rng a(7), b(7);
  for (int i = 0; i < 16; ++i) CHECK(a.next() == b.next());
  Rng d1 = Rng::derived(7, 1), d2 = Rng::derived(7, 2);
  CHECK(d1.next() != d2.next());
}
