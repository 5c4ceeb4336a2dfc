#include <gtest/gtest.h>

#include "coxeterlab/error.hpp"
#include "coxeterlab/nikulin.hpp"

using namespace coxeterlab;

namespace {

mpz_class choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Literal transcription of the displayed formula.
mpq_class a_literal(int d, int i, int k) {
  const int up = (d + 1) / 2, down = d / 2;
  mpq_class r(choose(d - i, k - i) * (choose(up, i) + choose(down, i)), choose(up, k) + choose(down, k));
  r.canonicalize();
  return r;
}

}  // namespace

TEST(Nikulin, KnownValues) {
  EXPECT_EQ(A_coeff(13, 1, 2), mpq_class(13, 3));
  EXPECT_EQ(A_coeff(4, 1, 2), mpq_class(6));
  EXPECT_EQ(mean_polygon_bound(13), mpq_class(13, 3));
  EXPECT_EQ(mean_polygon_bound(3), mpq_class(6));
  EXPECT_EQ(mean_polygon_bound(4), mpq_class(6));
  EXPECT_NO_THROW(A_coeff(6, 0, 3));
  EXPECT_EQ(A_coeff(6, 0, 3), a_literal(6, 0, 3));
}

TEST(Nikulin, ClosedFormEqualsGeneralFormula) {
  for (int d = 3; d <= 29; ++d) {
    EXPECT_EQ(mean_polygon_bound(d), A_coeff(d, 1, 2)) << d;
    for (int k = 1; k <= d / 2; ++k)
      for (int i = 0; i < k; ++i) EXPECT_EQ(A_coeff(d, i, k), a_literal(d, i, k));
  }
}

TEST(Nikulin, EvenDimensionSplitSymmetry) {
  for (int d = 4; d <= 28; d += 2) {
    const int h = d / 2;
    for (int k = 1; k <= h; ++k) {
      for (int i = 0; i < k; ++i) {
        mpq_class single(choose(d - i, k - i) * choose(h, i), choose(h, k));
        single.canonicalize();
        EXPECT_EQ(A_coeff(d, i, k), single);
      }
    }
  }
}

TEST(Nikulin, DomainErrors) {
  EXPECT_THROW(A_coeff(6, 2, 2), DomainError);
  EXPECT_THROW(A_coeff(6, -1, 2), DomainError);
  EXPECT_THROW(A_coeff(6, 0, 4), DomainError);
  EXPECT_THROW(mean_polygon_bound(2), DomainError);
  EXPECT_THROW(three_free_contradiction(2), DomainError);
  EXPECT_THROW(three_free_contradiction(30), DomainError);
}

TEST(Nikulin, ThreeFreeChain) {
  const auto r13 = three_free_contradiction(13);
  EXPECT_EQ(r13.lower, 12);
  EXPECT_EQ(r13.upper, 12);
  EXPECT_TRUE(r13.lower_strict);
  EXPECT_FALSE(r13.upper_strict);
  EXPECT_TRUE(r13.contradiction);
  EXPECT_TRUE(r13.chain_valid);
  const auto r14 = three_free_contradiction(14);
  EXPECT_EQ(r14.lower, 14);
  EXPECT_TRUE(r14.contradiction);
  const auto r12 = three_free_contradiction(12);
  EXPECT_EQ(r12.lower, 10);
  EXPECT_FALSE(r12.contradiction);
  EXPECT_FALSE(r12.chain_valid);
}

TEST(Nikulin, ContradictionRangeAndMonotoneGap) {
  for (int d = 3; d <= 12; ++d) EXPECT_FALSE(three_free_contradiction(d).contradiction) << d;
  mpq_class previous = three_free_contradiction(13).gap();
  for (int d = 13; d <= 29; ++d) {
    const auto r = three_free_contradiction(d);
    EXPECT_TRUE(r.contradiction) << d;
    EXPECT_GE(r.gap(), previous) << d;
    previous = r.gap();
  }
}
