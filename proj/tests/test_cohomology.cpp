#include <gtest/gtest.h>

#include "charvar/cohomology.hpp"
#include "charvar/random_rep.hpp"
#include "oracles.hpp"

using namespace charvar;

namespace {
const Family all_families[] = {Family::GL, Family::SL, Family::U, Family::SU};
}

TEST(Cohomology, IdentityHasZeroCoboundary) {
  for (auto f : all_families)
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto rep = identity_rep(GroupSpec(f, n), 3);
      EXPECT_LT(coboundary_matrix(rep).norm(), 1e-14);
      const auto c = cohomology_report(rep);
      EXPECT_EQ(c.dim_b1, 0u);
      EXPECT_EQ(c.dim_stab, c.lie_dim);
      EXPECT_EQ(c.dim_h1, 3 * c.lie_dim);
    }
}

TEST(Cohomology, CoboundaryShape) {
  const auto rep = random_rep(GroupSpec(Family::SU, 3), 4, RepMode::generic(), 1);
  const CMatrix d = coboundary_matrix(rep);
  EXPECT_EQ(d.rows(), 4 * 8);
  EXPECT_EQ(d.cols(), 8);
  // compact families produce real coordinates
  EXPECT_LT(d.imag().norm(), 1e-14);
}

TEST(Cohomology, Examples) {
  const auto sl2 = cohomology_report(random_rep(GroupSpec(Family::SL, 2), 2, RepMode::generic(), 2));
  EXPECT_EQ(sl2.dim_b1, 3u);
  EXPECT_EQ(sl2.dim_h1, 3u);
  EXPECT_EQ(sl2.dim_stab, 0u);
  EXPECT_EQ(sl2.field, Field::complex);

  const auto su2 = cohomology_report(random_rep(GroupSpec(Family::SU, 2), 3, RepMode::generic(), 2));
  EXPECT_EQ(su2.dim_h1, 6u);
  EXPECT_EQ(su2.field, Field::real);

  for (std::size_t n = 2; n <= 4; ++n) {
    const auto gl = cohomology_report(random_rep(GroupSpec(Family::GL, n), 2, RepMode::reduced(n - 1, 1), n));
    EXPECT_EQ(gl.dim_b1, n * n - 2);
    EXPECT_EQ(gl.dim_stab, 2u);
  }
}

TEST(Cohomology, DimensionIdentitiesAcrossSeeds) {
  for (auto f : all_families)
    for (std::size_t n = 2; n <= 3; ++n)
      for (std::uint64_t s = 0; s < 5; ++s) {
        const auto rep = random_rep(GroupSpec(f, n), 2 + s % 3, s % 2 ? RepMode::generic() : RepMode::reduced(n - 1, 1), s);
        const auto c = cohomology_report(rep);
        EXPECT_EQ(c.dim_z1, c.r * c.lie_dim);
        EXPECT_EQ(c.dim_h1 + c.dim_b1, c.dim_z1);
        EXPECT_EQ(c.dim_b1 + c.dim_stab, c.lie_dim);
        EXPECT_EQ(c.dim_stab, stabilizer_lie_dim(rep));
        EXPECT_EQ(c.dim_b1, oracle::lu_rank(coboundary_matrix(rep)));
        // irreducible: H^1 is the moduli dimension; stabiliser is the centre
        if (s % 2) {
          EXPECT_EQ(c.dim_stab, has_unit_det(f) ? 0u : 1u);
          EXPECT_EQ(c.dim_h1, (c.r - 1) * c.lie_dim + c.dim_stab);
        }
      }
}

TEST(Cohomology, CompactAndComplexAgree) {
  // dim_R over u(n) equals dim_C over gl(n) for a unitary rep.
  for (std::uint64_t s = 0; s < 10; ++s) {
    const std::size_t n = 2 + s % 3;
    const auto rep = s % 2 ? random_rep(GroupSpec(Family::U, n), 3, RepMode::generic(), s)
                           : random_rep(GroupSpec(Family::SU, n), 3, RepMode::reduced(n - 1, 1), s);
    const auto real = cohomology_report(rep);
    const auto cplx = cohomology_report(rep.with_family(complexification(rep.family())));
    EXPECT_EQ(real.dim_h1, cplx.dim_h1);
    EXPECT_EQ(real.dim_stab, cplx.dim_stab);
    EXPECT_EQ(cplx.field, Field::complex);
  }
}

TEST(Cohomology, ConjugationInvariant) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto rep = random_rep(GroupSpec(Family::GL, 3), 2, RepMode::reduced(2, 1), s);
    const auto g = sample_group_element(Family::GL, 3, s + 100);
    EXPECT_EQ(cohomology_report(rep).dim_h1, cohomology_report(conjugate(rep, g)).dim_h1);
  }
}

TEST(WBlock, Examples) {
  EXPECT_EQ(w_block_dim(random_rep(GroupSpec(Family::GL, 2), 2, RepMode::reduced(1, 1), 1)), 2u);
  EXPECT_EQ(w_block_dim(random_rep(GroupSpec(Family::U, 3), 3, RepMode::reduced(2, 1), 1)), 8u);
  EXPECT_EQ(w_block_dim(random_rep(GroupSpec(Family::SL, 4), 2, RepMode::reduced(2, 2), 1)), 8u);
  EXPECT_EQ(w_block_dim(random_rep(GroupSpec(Family::SU, 4), 3, RepMode::reduced(3, 1), 1)), 12u);
}

TEST(WBlock, GenericFormula) {
  for (auto f : all_families)
    for (std::size_t n = 2; n <= 4; ++n)
      for (std::size_t r = 2; r <= 4; ++r) {
        const std::size_t n1 = n - 1, n2 = 1;
        const auto rep = random_rep(GroupSpec(f, n), r, RepMode::reduced(n1, n2), 7 * r + n);
        EXPECT_EQ(w_block_dim(rep), 2 * n1 * n2 * (r - 1)) << to_string(f) << " n=" << n << " r=" << r;
      }
}

TEST(WBlock, RequiresTwoBlocks) {
  EXPECT_THROW(w_block_dim(random_rep(GroupSpec(Family::SU, 2), 2, RepMode::generic(), 1)), unsupported_input_error);
  EXPECT_THROW(w_block_dim(identity_rep(GroupSpec(Family::SU, 3), 2)), unsupported_input_error);
}
