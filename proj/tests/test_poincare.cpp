#include <gtest/gtest.h>

#include "charvar/poincare.hpp"

using namespace charvar;

// Reference values computed independently with sympy (rational function
// expansion of the Betti generating function).
TEST(Poincare, FrozenValues) {
  EXPECT_EQ(poincare_poly(1), (IntPoly{1}));
  EXPECT_EQ(poincare_poly(2), (IntPoly{1}));
  EXPECT_EQ(poincare_poly(3), (IntPoly{1, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(poincare_poly(4), (IntPoly{1, 0, 0, 0, 0, 0, 4, 0, 0, 1}));
  EXPECT_EQ(poincare_poly(5), (IntPoly{1, 0, 0, 0, 0, 0, 10, 0, 1, 5, 0, 0, 1}));
  EXPECT_EQ(poincare_poly(6), (IntPoly{1, 0, 0, 0, 0, 0, 20, 0, 6, 15, 0, 1, 6, 0, 0, 1}));
}

TEST(Poincare, Strings) {
  EXPECT_EQ(poincare_poly(1).to_string(), "1");
  EXPECT_EQ(poincare_poly(3).to_string(), "1 + t^6");
  EXPECT_EQ(poincare_poly(4).to_string(), "1 + 4t^6 + t^9");
  EXPECT_EQ(poincare_poly(5).to_string(), "1 + 10t^6 + t^8 + 5t^9 + t^12");
  EXPECT_EQ((IntPoly{0, 1, -3}).to_string(), "t - 3t^2");
  EXPECT_EQ(IntPoly().to_string(), "0");
}

TEST(Poincare, FPolyExamples) {
  EXPECT_EQ(f_poly(1), (IntPoly{0, 1, 1}));
  EXPECT_EQ(f_poly(2), (IntPoly{0, 2, 1, 0, 1}));
  EXPECT_EQ(f_poly(3), (IntPoly{0, 3, 1, 1, 3}));
  EXPECT_EQ(f_poly(4), (IntPoly{0, 4, 1, 4, 6, 0, 1}));
  EXPECT_EQ(f_poly(5), (IntPoly{0, 5, 1, 10, 10, 1, 5}));
}

TEST(Poincare, FPolyLeadingTerm) {
  for (std::size_t r = 1; r <= 40; ++r) {
    const auto f = f_poly(r);
    if (r % 2 == 0) {
      EXPECT_EQ(f.degree(), r + 2) << r;
      EXPECT_EQ(f.top_coefficient(), 1) << r;
    } else {
      EXPECT_EQ(f.degree(), r + 1) << r;
      EXPECT_EQ(f.top_coefficient(), BigInt(r)) << r;
    }
  }
}

TEST(Poincare, HPoly) {
  EXPECT_EQ(h_poly(2), (IntPoly{1, 0, 0, 2, 0, 0, 1}));
  EXPECT_EQ(h_poly(3).to_string(), "1 + 3t^3 + 3t^6 + t^9");
  EXPECT_EQ(h_poly(30).coefficient(45), binomial(30, 15));
}

TEST(Poincare, ClosedFormsAgree) {
  for (std::size_t r = 1; r <= 40; ++r) {
    const auto p = poincare_poly(r);
    EXPECT_EQ(p, poincare_poly_ab(r)) << r;
    EXPECT_TRUE(p.nonnegative());
    EXPECT_EQ(p.coefficient(0), 1);
    if (r >= 3) {
      EXPECT_EQ(p.degree(), 3 * r - 3) << r;
      EXPECT_EQ(p.top_coefficient(), 1) << r;
    }
  }
}

TEST(Poincare, LargeCoefficients) {
  // coefficients exceed 64 bits well before r = 80
  const auto p = poincare_poly(80);
  EXPECT_EQ(p, poincare_poly_ab(80));
  EXPECT_GT(p.coefficient(6 + 0), 0);
  BigInt big = 0;
  for (const auto& c : p.coeffs()) big = c > big ? c : big;
  EXPECT_GT(big, BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST(Poincare, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(40, 20), BigInt("137846528820"));
  EXPECT_EQ(binomial(3, 5), 0);
}

TEST(Obstruction, RankFourFails) {
  const auto res = manifold_obstruction(poincare_poly(4), 9);
  EXPECT_FALSE(res.passes);
  EXPECT_EQ(res.reason, ObstructionReason::duality);
  EXPECT_TRUE(res.certifies_non_manifold());
  ASSERT_TRUE(res.witness);
  EXPECT_EQ(*res.witness, 3u);
  EXPECT_EQ(res.mismatches, (std::vector<std::size_t>{3, 6}));
}

TEST(Obstruction, RankThreePasses) {
  const auto res = manifold_obstruction(poincare_poly(3), 6);
  EXPECT_TRUE(res.passes);
  EXPECT_EQ(res.reason, ObstructionReason::none);
  EXPECT_FALSE(res.witness);
  EXPECT_TRUE(duality_mismatches(poincare_poly(3)).empty());
}

TEST(Obstruction, HigherRanksFail) {
  for (std::size_t r = 5; r <= 40; ++r) {
    const auto p = poincare_poly(r);
    const std::size_t N = 3 * r - 3;
    const auto res = manifold_obstruction(p, N);
    EXPECT_TRUE(res.certifies_non_manifold()) << r;
    ASSERT_TRUE(res.witness);
    EXPECT_EQ(*res.witness, 3u) << r;
    EXPECT_EQ(p.coefficient(4), 0);
    EXPECT_GT(p.coefficient(N - 4), 0) << r;
    EXPECT_NE(std::find(res.mismatches.begin(), res.mismatches.end(), N - 4), res.mismatches.end()) << r;
  }
}

TEST(Obstruction, RankTwoIsBallNotCertified) {
  // X_2(SU(2)) is a closed 3-ball: b_3 = 0, so the degree test fails without
  // certifying anything.
  const auto res = manifold_obstruction(poincare_poly(2), 3);
  EXPECT_FALSE(res.passes);
  EXPECT_EQ(res.reason, ObstructionReason::degree_mismatch);
  EXPECT_FALSE(res.certifies_non_manifold());
}

TEST(Obstruction, TopCoefficientAndZero) {
  EXPECT_EQ(manifold_obstruction(IntPoly{1, 0, 2}, 2).reason, ObstructionReason::top_coefficient);
  EXPECT_THROW(manifold_obstruction(IntPoly(), 0), invalid_input_error);
}

TEST(IntPolyOps, DivisionChecksRemainder) {
  const IntPoly q{1, 2, 3};
  const IntPoly p = q * IntPoly{1, 0, 0, 0, -1};
  EXPECT_EQ(p.divided_by_one_minus_tm(4), q);
  EXPECT_THROW((IntPoly{1, 1}).divided_by_one_minus_tm(4), internal_error);
  EXPECT_THROW((p + IntPoly{0, 1}).divided_by_one_minus_tm(4), internal_error);
  EXPECT_THROW(p.divided_by_one_minus_tm(0), invalid_input_error);
  EXPECT_THROW((IntPoly{1, 3}).divided_exactly(2), internal_error);
  EXPECT_EQ((IntPoly{2, 4}).divided_exactly(2), (IntPoly{1, 2}));
}

TEST(IntPolyOps, Arithmetic) {
  const IntPoly a{1, 1};
  EXPECT_EQ(a.pow(3), (IntPoly{1, 3, 3, 1}));
  EXPECT_EQ(a.pow(0), (IntPoly{1}));
  EXPECT_EQ(a - a, IntPoly());
  EXPECT_EQ(a.shifted(2), (IntPoly{0, 0, 1, 1}));
  EXPECT_EQ(IntPoly::monomial(3, 5).to_string(), "5t^3");
  EXPECT_FALSE((IntPoly{1, -1}).nonnegative());
}
