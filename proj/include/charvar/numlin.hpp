#pragma once

// Dense complex linear algebra with a single shared tolerance. Every integer
// dimension computed elsewhere in the library is a rank() under this cutoff.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "charvar/errors.hpp"
#include "charvar/group.hpp"

namespace charvar {

using complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Rng = std::mt19937_64;

/// Singular-value cutoff. A value sigma counts towards the rank when
/// sigma > rel_eps * sigma_max, or sigma > abs_eps when sigma_max itself is
/// below abs_eps.
struct Tolerance {
  double rel_eps = 1e-8;
  double abs_eps = 1e-10;

  void check() const {
    if (!(rel_eps > 0.0) || !(abs_eps > 0.0) || !std::isfinite(rel_eps) || !std::isfinite(abs_eps))
      throw invalid_input_error("tolerances must be positive and finite");
  }
};

inline bool all_finite(const CMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

inline void require_finite(const CMatrix& m) {
  if (!all_finite(m)) throw invalid_input_error("matrix has non-finite entries");
}

/// Singular values in descending order.
inline RVector singular_values(const CMatrix& m) {
  require_finite(m);
  if (m.size() == 0) return RVector(0);
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues();
}

inline double rank_cutoff(double sigma_max, const Tolerance& tol) {
  return sigma_max < tol.abs_eps ? tol.abs_eps : tol.rel_eps * sigma_max;
}

inline std::size_t rank_from_singular_values(const RVector& sv, const Tolerance& tol) {
  if (sv.size() == 0) return 0;
  const double cut = rank_cutoff(sv(0), tol);
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++k;
  return k;
}

inline std::size_t rank(const CMatrix& m, const Tolerance& tol = {}) {
  tol.check();
  return rank_from_singular_values(singular_values(m), tol);
}

/// Orthonormal basis of the numerical null space; size() == cols - rank.
inline std::vector<CVector> kernel_basis(const CMatrix& m, const Tolerance& tol = {}) {
  tol.check();
  require_finite(m);
  const auto cols = static_cast<std::size_t>(m.cols());
  std::vector<CVector> out;
  if (m.rows() == 0) {
    for (std::size_t j = 0; j < cols; ++j) out.push_back(CVector::Unit(m.cols(), static_cast<Eigen::Index>(j)));
    return out;
  }
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const std::size_t k = rank_from_singular_values(svd.singularValues(), tol);
  for (std::size_t j = k; j < cols; ++j) out.push_back(svd.matrixV().col(static_cast<Eigen::Index>(j)));
  return out;
}

/// Orthonormal basis of the column space (left singular vectors above cutoff).
inline CMatrix range_basis(const CMatrix& m, const Tolerance& tol = {}) {
  tol.check();
  require_finite(m);
  if (m.size() == 0) return CMatrix(m.rows(), 0);
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU);
  const auto k = static_cast<Eigen::Index>(rank_from_singular_values(svd.singularValues(), tol));
  return svd.matrixU().leftCols(k);
}

struct HermitianEig {
  RVector values; ///< ascending
  CMatrix vectors; ///< unitary, column j pairs with values(j)
};

inline HermitianEig hermitian_eig(const CMatrix& m, const Tolerance& tol = {}) {
  tol.check();
  require_finite(m);
  if (m.rows() != m.cols()) throw invalid_input_error("hermitian_eig: matrix is not square");
  const double scale = m.norm();
  if ((m - m.adjoint()).norm() > tol.rel_eps * scale + tol.abs_eps)
    throw invalid_input_error("hermitian_eig: matrix is not Hermitian");
  const CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  if (es.info() != Eigen::Success) throw internal_error("hermitian_eig: eigensolver did not converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

/// Inverse by LU solve against the identity.
inline CMatrix inverse(const CMatrix& m) {
  Eigen::PartialPivLU<CMatrix> lu(m);
  return lu.solve(CMatrix::Identity(m.rows(), m.cols()));
}

inline double unitarity_defect(const CMatrix& m) {
  return (m.adjoint() * m - CMatrix::Identity(m.cols(), m.cols())).norm();
}

/// Principal branch n-th root.
inline complex principal_root(complex z, std::size_t n) {
  if (n == 1) return z;
  return std::pow(z, 1.0 / static_cast<double>(n));
}

inline CMatrix random_complex_normal(std::size_t rows, std::size_t cols, Rng& rng) {
  // Real and imaginary parts N(0, 1/2) so that E|z|^2 = 1.
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = complex(re, im);
    }
  return m;
}

/// Draw one element of GL, SL, U or SU(n).
///
/// GL: i.i.d. complex normal entries, redrawn while |det| < 1e-6.
/// SL: a GL draw divided by the principal n-th root of its determinant.
/// U:  QR orthonormalisation of a GL draw with the phases of R's diagonal
///     moved into Q (Haar distributed).
/// SU: a U draw divided by the principal n-th root of its determinant.
inline CMatrix sample_group_element(Family family, std::size_t n, Rng& rng) {
  if (n < 1) throw invalid_input_error("sample_group_element: n must be >= 1");
  CMatrix x;
  for (;;) {
    x = random_complex_normal(n, n, rng);
    if (std::abs(x.determinant()) >= 1e-6) break;
  }
  switch (family) {
  case Family::GL: return x;
  case Family::SL: return x / principal_root(x.determinant(), n);
  case Family::U:
  case Family::SU: {
    Eigen::HouseholderQR<CMatrix> qr(x);
    CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
      const double a = std::abs(r(j, j));
      if (a > 0) q.col(j) *= r(j, j) / a;
    }
    if (family == Family::SU) q /= principal_root(q.determinant(), n);
    return q;
  }
  }
  throw invalid_input_error("sample_group_element: unknown family");
}

inline CMatrix sample_group_element(Family family, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return sample_group_element(family, n, rng);
}

} // namespace charvar
