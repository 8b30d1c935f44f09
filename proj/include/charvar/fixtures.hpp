#pragma once

// Explicit representations with known stabiliser or trace behaviour:
// irreducible-but-not-good examples for O(n) and Sp(4), the SL(2) shadow of
// the PSL(2) example, and the SO(2) rotation pair that traces cannot tell
// apart.

#include <cmath>
#include <string>
#include <vector>

#include "charvar/representation.hpp"

namespace charvar::fixtures {

struct Fixture {
  std::string name;
  std::string description;
  Representation rep;
  std::vector<CMatrix> candidates;
  std::vector<bool> expected_commutes; ///< one per candidate
};

inline CMatrix diag(std::initializer_list<complex> d) {
  CVector v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (auto x : d) v(i++) = x;
  return v.asDiagonal();
}

inline CMatrix sign_diag(std::size_t n, unsigned mask) {
  CMatrix m = CMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    if (mask & (1U << i)) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = -1.0;
  return m;
}

/// Image = all diagonal +-1 matrices, generated by the n single sign flips.
/// Every one of the 2^n sign matrices commutes; all but +-I are non-central.
inline Fixture o_signs(std::size_t n) {
  std::vector<CMatrix> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(sign_diag(n, 1U << i));
  Fixture f{"o" + std::to_string(n) + "_signs",
            "O(" + std::to_string(n) + ") image of all diagonal sign matrices; finite non-trivial stabiliser",
            Representation(GroupSpec(Family::U, n), std::move(gens)),
            {},
            {}};
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    f.candidates.push_back(sign_diag(n, mask));
    f.expected_commutes.push_back(true);
  }
  return f;
}

/// Symplectic form preserved by the Sp(4) fixture generators.
inline CMatrix sp4_form() {
  CMatrix j = CMatrix::Zero(4, 4);
  j(0, 3) = 1.0;
  j(1, 2) = 1.0;
  j(2, 1) = -1.0;
  j(3, 0) = -1.0;
  return j;
}

inline std::vector<CMatrix> sp4_generators() {
  const complex I(0.0, 1.0);
  CMatrix a = CMatrix::Zero(4, 4);
  a(0, 3) = 1.0;
  a(1, 2) = 1.0;
  a(2, 1) = -1.0;
  a(3, 0) = -1.0;
  CMatrix c = CMatrix::Zero(4, 4);
  c(0, 3) = -1.0;
  c(1, 2) = 1.0;
  c(2, 1) = -1.0;
  c(3, 0) = 1.0;
  return {a, diag({I, -I, I, -I}), c};
}

/// Order-16 subgroup of Sp(4). Its commutant is spanned by diag(1,0,0,1) and
/// diag(0,1,1,0); diag(1,-1,-1,1) is a non-central symplectic element of it.
/// diag(i,-i,i,-i) is the second generator and anticommutes with the other
/// two.
inline Fixture sp4_order16() {
  const complex I(0.0, 1.0);
  return {"sp4_order16",
          "order-16 subgroup of Sp(4) with finite non-central stabiliser",
          Representation(GroupSpec(Family::U, 4), sp4_generators()),
          {diag({1, -1, -1, 1}), diag({I, -I, I, -I}), diag({1, 1, 1, 1}), diag({-1, -1, -1, -1})},
          {true, false, true, true}};
}

inline CMatrix rotation(double theta) {
  CMatrix m(2, 2);
  m << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return m;
}

/// Rank-one SO(2) representation x1 -> rotation by theta. theta and -theta
/// are distinct points of X(SO(2)) = C^* with identical word traces.
inline Fixture so2_rotation(double theta, std::string name) {
  return {std::move(name), "SO(2) rotation by " + std::to_string(theta),
          Representation(GroupSpec(Family::SU, 2), {rotation(theta)}), {}, {}};
}

/// Diagonal and anti-diagonal SL(2) pair: irreducible with trivial
/// stabiliser mod centre in SL(2). diag(i,-i) conjugates each generator to
/// +-itself, so it fixes the image in PSL(2) but does not commute in SL(2).
inline Fixture sl2_diag_antidiag() {
  const complex I(0.0, 1.0);
  CMatrix w(2, 2);
  w << 0.0, 1.0, -1.0, 0.0;
  return {"sl2_diag_antidiag",
          "SL(2) pair in the diagonal/anti-diagonal subgroup; PSL(2) image has stabiliser diag(i,-i)",
          Representation(GroupSpec(Family::SL, 2), {diag({2.0, 0.5}), w}),
          {diag({I, -I}), diag({1, 1})},
          {false, true}};
}

inline constexpr double so2_theta = 0.7;

inline std::vector<Fixture> all() {
  return {o_signs(4), sp4_order16(), sl2_diag_antidiag(), so2_rotation(so2_theta, "so2_theta"),
          so2_rotation(-so2_theta, "so2_minus_theta")};
}

} // namespace charvar::fixtures
