#pragma once

// Fixed orthonormal bases of gl(n), sl(n), u(n), su(n) and the infinitesimal
// adjoint map X -> (Ad_{x_i} X - X)_i written in those bases.

#include <cmath>
#include <vector>

#include "charvar/representation.hpp"

namespace charvar {

namespace detail {

inline CMatrix elementary(std::size_t n, std::size_t i, std::size_t j) {
  CMatrix e = CMatrix::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

// diag(1,...,1,-k,0,...)/sqrt(k(k+1)) with k ones, k = 1..n-1.
inline CMatrix traceless_diagonal(std::size_t n, std::size_t k) {
  CMatrix h = CMatrix::Zero(n, n);
  const double s = 1.0 / std::sqrt(static_cast<double>(k * (k + 1)));
  for (std::size_t i = 0; i < k; ++i) h(i, i) = s;
  h(k, k) = -static_cast<double>(k) * s;
  return h;
}

} // namespace detail

/// Orthonormal basis of Lie(G). Complex families use the Hermitian Frobenius
/// product tr(A^H B); compact families use its real part on anti-Hermitian
/// matrices.
///
/// gl: E_ij row-major. sl: off-diagonal E_ij, then traceless diagonals.
/// u:  i E_jj, then (E_jk - E_kj)/sqrt2 and i(E_jk + E_kj)/sqrt2 for j < k.
/// su: as u with the diagonal part replaced by i * traceless diagonals.
inline std::vector<CMatrix> lie_algebra_basis(Family family, std::size_t n) {
  using detail::elementary;
  std::vector<CMatrix> basis;
  const complex I(0.0, 1.0);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  switch (family) {
  case Family::GL:
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) basis.push_back(elementary(n, i, j));
    break;
  case Family::SL:
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) basis.push_back(elementary(n, i, j));
    for (std::size_t k = 1; k < n; ++k) basis.push_back(detail::traceless_diagonal(n, k));
    break;
  case Family::U:
  case Family::SU:
    if (family == Family::U)
      for (std::size_t j = 0; j < n; ++j) basis.push_back(I * elementary(n, j, j));
    else
      for (std::size_t k = 1; k < n; ++k) basis.push_back(I * detail::traceless_diagonal(n, k));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        basis.push_back(inv_sqrt2 * (elementary(n, j, k) - elementary(n, k, j)));
        basis.push_back(I * inv_sqrt2 * (elementary(n, j, k) + elementary(n, k, j)));
      }
    break;
  }
  return basis;
}

/// Coordinates of y in an orthonormal basis (real parts only for compact
/// families, returned as complex numbers with zero imaginary part).
inline CVector lie_coordinates(const std::vector<CMatrix>& basis, const CMatrix& y, bool real_field) {
  CVector c(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const complex v = basis[b].cwiseProduct(y.conjugate()).sum(); // conj(tr(E^H y))
    c(static_cast<Eigen::Index>(b)) = real_field ? complex(v.real(), 0.0) : std::conj(v);
  }
  return c;
}

/// The stacked map Lie(G) -> Lie(G)^r, X -> (x_i X x_i^{-1} - X)_i, in the
/// basis of lie_algebra_basis(rep.family(), n). Rows are grouped by
/// generator.
inline CMatrix adjoint_coboundary(const Representation& rep) {
  const auto basis = lie_algebra_basis(rep.family(), rep.n());
  const bool real_field = rep.spec().compact();
  const auto d = static_cast<Eigen::Index>(basis.size());
  CMatrix m(d * static_cast<Eigen::Index>(rep.r()), d);
  for (std::size_t i = 0; i < rep.r(); ++i) {
    const CMatrix& x = rep.generator(i);
    Eigen::PartialPivLU<CMatrix> lu(x.transpose());
    for (Eigen::Index a = 0; a < d; ++a) {
      const CMatrix xe = x * basis[static_cast<std::size_t>(a)];
      const CMatrix ad = lu.solve(xe.transpose()).transpose(); // x e x^{-1}
      m.block(static_cast<Eigen::Index>(i) * d, a, d, 1) =
          lie_coordinates(basis, ad - basis[static_cast<std::size_t>(a)], real_field);
    }
  }
  return m;
}

} // namespace charvar
