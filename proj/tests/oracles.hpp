#pragma once

// Independent reference computations for the tests. Nothing here calls the
// SVD-based rank code under test.

#include <algorithm>
#include <vector>

#include <Eigen/Dense>

#include "charvar/representation.hpp"

namespace oracle {

using charvar::CMatrix;

inline void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<Eigen::Index>& cur,
                         std::vector<std::vector<Eigen::Index>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(static_cast<Eigen::Index>(i));
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Largest k with some k x k minor of modulus > eps.
inline std::size_t minor_rank(const CMatrix& m, double eps) {
  const auto rows = static_cast<std::size_t>(m.rows()), cols = static_cast<std::size_t>(m.cols());
  for (std::size_t k = std::min(rows, cols); k >= 1; --k) {
    std::vector<std::vector<Eigen::Index>> rs, cs;
    std::vector<Eigen::Index> cur;
    combinations(rows, k, 0, cur, rs);
    combinations(cols, k, 0, cur, cs);
    for (const auto& ri : rs)
      for (const auto& ci : cs) {
        CMatrix sub(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = m(ri[a], ci[b]);
        if (std::abs(sub.determinant()) > eps) return k;
      }
  }
  return 0;
}

/// Rank by full-pivot LU with a relative threshold and an absolute floor
/// of 1e-10 on the pivots.
inline std::size_t lu_rank(const CMatrix& m, double rel = 1e-9) {
  const double big = m.cwiseAbs().maxCoeff();
  if (m.size() == 0 || big < 1e-10) return 0;
  Eigen::FullPivLU<CMatrix> lu(m);
  lu.setThreshold(std::max(rel, 1e-10 / big));
  return static_cast<std::size_t>(lu.rank());
}

/// Dimension of the span of all words of length <= max_len in the
/// generators and their inverses (explicit enumeration).
inline std::size_t word_span_dim(const charvar::Representation& rep, std::size_t max_len) {
  std::vector<CMatrix> letters;
  for (const auto& x : rep.generators()) {
    letters.push_back(x);
    letters.push_back(x.inverse());
  }
  const auto n = static_cast<Eigen::Index>(rep.n());
  std::vector<CMatrix> words{CMatrix::Identity(n, n)}, frontier = words;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<CMatrix> next;
    for (const auto& w : frontier)
      for (const auto& l : letters) next.push_back(w * l);
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  CMatrix stack(n * n, static_cast<Eigen::Index>(words.size()));
  for (std::size_t k = 0; k < words.size(); ++k) {
    const CMatrix w = words[k] / words[k].norm();
    stack.col(static_cast<Eigen::Index>(k)) = Eigen::Map<const Eigen::VectorXcd>(w.data(), n * n);
  }
  return lu_rank(stack);
}

/// Dimension of the commutant by full-pivot LU on the Kronecker form.
inline std::size_t commutant_dim_lu(const charvar::Representation& rep) {
  const auto n = static_cast<Eigen::Index>(rep.n());
  const CMatrix eye = CMatrix::Identity(n, n);
  CMatrix stack(n * n * static_cast<Eigen::Index>(rep.r()), n * n);
  for (std::size_t g = 0; g < rep.r(); ++g) {
    const CMatrix& x = rep.generator(g);
    CMatrix k(n * n, n * n);
    // vec(XY - YX) = (I kron X - X^T kron I) vec(Y)
    for (Eigen::Index a = 0; a < n; ++a)
      for (Eigen::Index b = 0; b < n; ++b) {
        k.block(a * n, b * n, n, n) = eye(a, b) * x - x(b, a) * eye;
      }
    stack.middleRows(static_cast<Eigen::Index>(g) * n * n, n * n) = k;
  }
  return static_cast<std::size_t>(n * n) - lu_rank(stack);
}

} // namespace oracle
