#pragma once

// Group cohomology of a free group with coefficients in Lie(G) twisted by
// Ad(rho). For F_r every r-tuple of Lie algebra elements is a cocycle, so
// Z^1 = Lie(G)^r; B^1 is the image of the coboundary X -> (Ad_{x_i}X - X)_i
// and its kernel is the stabiliser Lie algebra.
//
// The H^1 dimension is defined for any representation. It is the tangent
// space of a slice only at a polystable (completely reducible) point.

#include <string>

#include "charvar/lie_algebra.hpp"
#include "charvar/structure.hpp"

namespace charvar {

struct CohomologyReport {
  Field field = Field::complex;
  std::size_t dim_z1 = 0;
  std::size_t dim_b1 = 0;
  std::size_t dim_h1 = 0;
  std::size_t dim_stab = 0;
  std::size_t lie_dim = 0;
  std::size_t r = 0;
};

/// Coboundary map Lie(G) -> Lie(G)^r in the fixed orthonormal basis; real
/// entries for compact families.
inline CMatrix coboundary_matrix(const Representation& rep) { return adjoint_coboundary(rep); }

inline CohomologyReport cohomology_report(const Representation& rep, const Tolerance& tol = {}) {
  CohomologyReport c;
  c.field = rep.spec().field();
  c.lie_dim = rep.spec().lie_dim();
  c.r = rep.r();
  c.dim_z1 = c.r * c.lie_dim;
  c.dim_b1 = rank(coboundary_matrix(rep), tol);
  c.dim_stab = c.lie_dim - c.dim_b1;
  c.dim_h1 = c.dim_z1 - c.dim_b1;
  return c;
}

/// dim H^1(rho) - dim H^1(rho_1) - dim H^1(rho_2) for a reduced-type rho,
/// i.e. the dimension of the off-diagonal summand W (2 n1 n2 (r-1)).
///
/// The blocks are read in GL (complex input) or U (compact input). For
/// SL/SU the block-diagonal part of Lie(G) is gl(n1)+gl(n2) minus the trivial
/// trace line, whose H^1 has dimension r; that line is added back.
inline std::size_t w_block_dim(const Representation& rep, const Tolerance& tol = {}, std::uint64_t seed = 0) {
  const auto profile = decompose(rep, tol, seed);
  if (!reduced_type(profile))
    throw unsupported_input_error("w_block_dim: representation has " + std::to_string(profile.block_count()) +
                                  " irreducible blocks, expected exactly 2");
  const std::size_t total = cohomology_report(rep, tol).dim_h1;
  std::size_t blocks = 0;
  for (const auto& b : profile.blocks) blocks += cohomology_report(b, tol).dim_h1;
  if (has_unit_det(rep.family())) blocks -= rep.r();
  if (blocks > total) throw internal_error("w_block_dim: block cohomology exceeds total");
  return total - blocks;
}

} // namespace charvar
