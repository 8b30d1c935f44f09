#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "charvar/lie_algebra.hpp"
#include "charvar/representation.hpp"

namespace charvar {

namespace detail {

inline CVector vec(const CMatrix& m) { return Eigen::Map<const CVector>(m.data(), m.size()); }

inline CMatrix unvec(const CVector& v, std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return Eigen::Map<const CMatrix>(v.data(), k, k);
}

} // namespace detail

/// Dimension of the unital algebra spanned by all words in the generators
/// and their inverses.
///
/// Keeps an orthonormal basis of the span (as vectorised n x n matrices) and
/// right-multiplies it by every generator and inverse until one full sweep
/// adds nothing.
inline std::size_t generated_algebra_dim(const Representation& rep, const Tolerance& tol = {}) {
  const std::size_t n = rep.n();
  const auto nn = static_cast<Eigen::Index>(n * n);
  std::vector<CMatrix> letters;
  for (const auto& x : rep.generators()) {
    letters.push_back(x);
    letters.push_back(inverse(x));
  }
  CMatrix basis = detail::vec(CMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
  basis /= basis.norm();
  const std::size_t max_sweeps = 2 * n * n;
  for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
    const Eigen::Index d = basis.cols();
    CMatrix candidates(nn, d * static_cast<Eigen::Index>(1 + letters.size()));
    candidates.leftCols(d) = basis;
    Eigen::Index col = d;
    for (Eigen::Index k = 0; k < d; ++k) {
      const CMatrix b = detail::unvec(basis.col(k), n);
      for (const auto& g : letters) {
        CVector v = detail::vec(b * g);
        const double nv = v.norm();
        if (nv > 0) v /= nv;
        candidates.col(col++) = v;
      }
    }
    CMatrix next = range_basis(candidates, tol);
    if (next.cols() <= d) return static_cast<std::size_t>(d);
    basis = std::move(next);
  }
  throw internal_error("generated_algebra_dim: span did not stabilise within 2n^2 sweeps");
}

/// Burnside: irreducible iff the generators span all of M_n.
inline bool is_irreducible(const Representation& rep, const Tolerance& tol = {}) {
  return generated_algebra_dim(rep, tol) == rep.n() * rep.n();
}

/// Stacked map vec(Y) -> (vec(x_i Y - Y x_i))_i. Each block is scaled by
/// 1/max(1, |x_i|), which leaves the kernel unchanged.
inline CMatrix commutator_map(const Representation& rep) {
  const std::size_t n = rep.n();
  const auto nn = static_cast<Eigen::Index>(n * n);
  const auto N = static_cast<Eigen::Index>(n);
  CMatrix m = CMatrix::Zero(nn * static_cast<Eigen::Index>(rep.r()), nn);
  for (std::size_t g = 0; g < rep.r(); ++g) {
    const CMatrix& x = rep.generator(g);
    const double s = 1.0 / std::max(1.0, x.norm());
    const Eigen::Index off = static_cast<Eigen::Index>(g) * nn;
    // Column p + qN is Y = E_pq: (x E_pq)_{iq} = x_ip, (E_pq x)_{pj} = x_qj.
    for (Eigen::Index q = 0; q < N; ++q)
      for (Eigen::Index p = 0; p < N; ++p) {
        const Eigen::Index c = p + q * N;
        for (Eigen::Index i = 0; i < N; ++i) m(off + i + q * N, c) += s * x(i, p);
        for (Eigen::Index j = 0; j < N; ++j) m(off + p + j * N, c) -= s * x(q, j);
      }
  }
  return m;
}

/// Orthonormal basis (Frobenius) of {Y : Y x_i = x_i Y for all i}.
inline std::vector<CMatrix> commutant_basis(const Representation& rep, const Tolerance& tol = {}) {
  std::vector<CMatrix> out;
  for (const auto& v : kernel_basis(commutator_map(rep), tol)) out.push_back(detail::unvec(v, rep.n()));
  return out;
}

inline std::size_t commutant_dim(const Representation& rep, const Tolerance& tol = {}) {
  return rep.n() * rep.n() - rank(commutator_map(rep), tol);
}

/// Dimension of the stabiliser Lie algebra inside Lie(G): complex for GL/SL,
/// real for U/SU.
inline std::size_t stabilizer_lie_dim(const Representation& rep, const Tolerance& tol = {}) {
  return rep.spec().lie_dim() - rank(adjoint_coboundary(rep), tol);
}

/// Irreducible block structure of a completely reducible representation.
///
/// conjugate(rep, basis_change) is block diagonal with the blocks in
/// `blocks`, largest first. basis_change is always unitary (a permutation,
/// or a product of permutations and spectral bases).
struct DecompositionProfile {
  std::vector<std::size_t> block_sizes;
  CMatrix basis_change;
  std::vector<Representation> blocks;
  bool certified = false;

  std::size_t block_count() const { return block_sizes.size(); }
};

namespace detail {

struct Leaf {
  CMatrix rows; // orthonormal rows spanning the block, in parent coordinates
  Representation block;
};

inline bool all_unitary(const Representation& rep, const Tolerance& tol) {
  const double slack = tol.rel_eps * std::sqrt(static_cast<double>(rep.n()));
  return std::all_of(rep.generators().begin(), rep.generators().end(),
                     [&](const CMatrix& x) { return unitarity_defect(x) <= slack; });
}

inline Representation restrict_to(const Representation& rep, const CMatrix& rows, Family family) {
  std::vector<CMatrix> gens;
  for (const auto& x : rep.generators()) gens.push_back(rows * x * rows.adjoint());
  return {GroupSpec(family, static_cast<std::size_t>(rows.rows())), std::move(gens)};
}

// Connected components of the coordinate graph i ~ j when some generator has
// a non-negligible (i,j) or (j,i) entry.
inline std::vector<std::vector<Eigen::Index>> coordinate_components(const Representation& rep, const Tolerance& tol) {
  const auto n = static_cast<Eigen::Index>(rep.n());
  double scale = 1.0;
  for (const auto& x : rep.generators()) scale = std::max(scale, x.cwiseAbs().maxCoeff());
  const double thresh = tol.rel_eps * scale;
  std::vector<Eigen::Index> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Eigen::Index i) {
    while (parent[static_cast<std::size_t>(i)] != i) i = parent[static_cast<std::size_t>(i)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
    return i;
  };
  for (const auto& x : rep.generators())
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (i != j && std::abs(x(i, j)) > thresh) {
          const auto a = find(i), b = find(j);
          if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
  std::vector<std::vector<Eigen::Index>> comps;
  std::vector<Eigen::Index> slot(static_cast<std::size_t>(n), -1);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto root = static_cast<std::size_t>(find(i));
    if (slot[root] < 0) {
      slot[root] = static_cast<Eigen::Index>(comps.size());
      comps.emplace_back();
    }
    comps[static_cast<std::size_t>(slot[root])].push_back(i);
  }
  return comps;
}

// Eigenspaces of a random Hermitian element of the commutant, with
// eigenvalues closer than 1e-6 (after normalisation) merged.
inline std::vector<CMatrix> spectral_split(const Representation& rep, const Tolerance& tol, Rng& rng) {
  const auto basis = commutant_basis(rep, tol);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int attempt = 0; attempt < 8 && basis.size() > 1; ++attempt) {
    CMatrix c = CMatrix::Zero(static_cast<Eigen::Index>(rep.n()), static_cast<Eigen::Index>(rep.n()));
    for (const auto& b : basis) c += normal(rng) * b;
    CMatrix h = c + c.adjoint();
    const double hn = h.norm();
    if (hn == 0.0) continue;
    h /= hn;
    const auto eig = hermitian_eig(h, tol);
    std::vector<CMatrix> spaces;
    Eigen::Index start = 0;
    for (Eigen::Index k = 1; k <= eig.values.size(); ++k) {
      if (k == eig.values.size() || eig.values(k) - eig.values(k - 1) >= 1e-6) {
        spaces.push_back(eig.vectors.middleCols(start, k - start).adjoint());
        start = k;
      }
    }
    if (spaces.size() > 1) return spaces;
  }
  return {};
}

inline std::vector<Leaf> decompose_rec(const Representation& rep, const Tolerance& tol, Rng& rng, int depth) {
  const auto n = static_cast<Eigen::Index>(rep.n());
  const CMatrix eye = CMatrix::Identity(n, n);
  if (depth > 2 * n + 2) throw internal_error("decompose: recursion did not terminate");
  if (is_irreducible(rep, tol)) return {Leaf{eye, rep}};

  std::vector<CMatrix> pieces;
  const auto comps = coordinate_components(rep, tol);
  if (comps.size() > 1) {
    for (const auto& idx : comps) {
      CMatrix rows(static_cast<Eigen::Index>(idx.size()), n);
      for (std::size_t k = 0; k < idx.size(); ++k) rows.row(static_cast<Eigen::Index>(k)) = eye.row(idx[k]);
      pieces.push_back(std::move(rows));
    }
  } else if (all_unitary(rep, tol)) {
    pieces = spectral_split(rep, tol, rng);
    if (pieces.empty())
      throw internal_error("decompose: reducible unitary block with scalar commutant (tolerance too tight?)");
  } else {
    throw unsupported_input_error(
        "decompose: reducible representation that is neither unitary nor block diagonal; "
        "pass the polystable (block-diagonal, completely reducible) representative");
  }

  std::vector<Leaf> leaves;
  for (const auto& rows : pieces) {
    const Representation sub = restrict_to(rep, rows, rep.family());
    for (auto& leaf : decompose_rec(sub, tol, rng, depth + 1)) leaves.push_back(Leaf{leaf.rows * rows, std::move(leaf.block)});
  }
  return leaves;
}

} // namespace detail

/// Splits a unitary, or block-diagonal completely reducible, representation
/// into certified irreducible blocks.
///
/// Blocks of complex-family inputs are labelled GL, blocks of compact inputs
/// U. Throws unsupported_input_error for other reducible inputs.
inline DecompositionProfile decompose(const Representation& rep, const Tolerance& tol = {}, std::uint64_t seed = 0) {
  Rng rng(seed);
  const Family block_family = rep.spec().compact() ? Family::U : Family::GL;
  auto leaves = detail::decompose_rec(rep.with_family(block_family), tol, rng, 0);
  std::stable_sort(leaves.begin(), leaves.end(),
                   [](const detail::Leaf& a, const detail::Leaf& b) { return a.rows.rows() > b.rows.rows(); });
  DecompositionProfile out;
  out.basis_change = CMatrix(static_cast<Eigen::Index>(rep.n()), static_cast<Eigen::Index>(rep.n()));
  Eigen::Index row = 0;
  out.certified = true;
  for (auto& leaf : leaves) {
    out.block_sizes.push_back(leaf.block.n());
    out.basis_change.middleRows(row, leaf.rows.rows()) = leaf.rows;
    row += leaf.rows.rows();
    out.certified = out.certified && is_irreducible(leaf.block, tol);
    out.blocks.push_back(std::move(leaf.block));
  }
  return out;
}

/// (n1, n2) with n1 >= n2 when there are exactly two irreducible blocks.
inline std::optional<std::pair<std::size_t, std::size_t>> reduced_type(const DecompositionProfile& p) {
  if (p.block_count() != 2) return std::nullopt;
  return std::make_pair(p.block_sizes[0], p.block_sizes[1]);
}

inline std::optional<std::pair<std::size_t, std::size_t>> reduced_type(const Representation& rep, const Tolerance& tol = {},
                                                                       std::uint64_t seed = 0) {
  return reduced_type(decompose(rep, tol, seed));
}

/// For each candidate: does it commute with every generator?
inline std::vector<bool> stabilizer_candidates_check(const Representation& rep, const std::vector<CMatrix>& candidates,
                                                     const Tolerance& tol = {}) {
  const auto n = static_cast<Eigen::Index>(rep.n());
  std::vector<bool> out;
  for (const auto& c : candidates) {
    if (c.rows() != n || c.cols() != n) throw structural_error("stabilizer candidate has the wrong size");
    bool ok = true;
    for (const auto& x : rep.generators())
      ok = ok && (c * x - x * c).norm() <= tol.rel_eps * c.norm() * x.norm() + tol.abs_eps;
    out.push_back(ok);
  }
  return out;
}

} // namespace charvar
