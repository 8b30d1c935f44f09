#pragma once

#include <string>
#include <vector>

#include "charvar/representation.hpp"

namespace charvar {

/// Labelled complex coordinates, e.g. {"tr(x1x2)", "det(x1)"}.
struct TraceTuple {
  std::vector<complex> values;
  std::vector<std::string> labels;

  std::size_t size() const { return values.size(); }
  void push(std::string label, complex v) {
    labels.push_back(std::move(label));
    values.push_back(v);
  }

  /// Largest |a_k - b_k|; throws when the labels differ.
  double distance(const TraceTuple& o) const {
    if (labels != o.labels) throw structural_error("TraceTuple: label mismatch");
    double d = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) d = std::max(d, std::abs(values[k] - o.values[k]));
    return d;
  }
};

inline TraceTuple word_traces(const Representation& rep, const std::vector<Word>& words) {
  TraceTuple t;
  for (const auto& w : words) t.push("tr(" + w.label() + ")", evaluate_word(rep, w).trace());
  return t;
}

/// (c_1, ..., c_{n-1}, det) with charpoly(lambda) = lambda^n - c_1 lambda^{n-1}
/// + c_2 lambda^{n-2} - ... + (-1)^n det, via Newton's identities on the power
/// traces p_k = tr(X^k).
inline TraceTuple charpoly_coords(const CMatrix& m) {
  if (m.rows() != m.cols()) throw structural_error("charpoly_coords: matrix is not square");
  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<complex> p(n + 1), e(n + 1);
  CMatrix power = CMatrix::Identity(m.rows(), m.cols());
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * m;
    p[k] = power.trace();
  }
  e[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    complex s = 0.0;
    for (std::size_t i = 1; i <= k; ++i) s += (i % 2 == 1 ? 1.0 : -1.0) * e[k - i] * p[i];
    e[k] = s / static_cast<double>(k);
  }
  TraceTuple t;
  for (std::size_t k = 1; k <= n; ++k) t.push(k == n ? "det" : "c" + std::to_string(k), e[k]);
  return t;
}

/// (tr A, tr B, tr AB): coordinates on X_2(SL(2)) = C^3.
inline TraceTuple sl2_pair_coords(const Representation& rep) {
  if (rep.n() != 2 || rep.r() != 2 || !has_unit_det(rep.family()))
    throw unsupported_input_error("sl2_pair_coords: needs an SL(2) or SU(2) pair");
  const CMatrix& a = rep.generator(0);
  const CMatrix& b = rep.generator(1);
  TraceTuple t;
  t.push("tr(x1)", a.trace());
  t.push("tr(x2)", b.trace());
  t.push("tr(x1x2)", (a * b).trace());
  return t;
}

/// (tr A, tr B, tr AB, det A, det B) on X_2(GL(2)).
inline TraceTuple gl2_pair_coords(const Representation& rep) {
  if (rep.n() != 2 || rep.r() != 2 || has_unit_det(rep.family()))
    throw unsupported_input_error("gl2_pair_coords: needs a GL(2) or U(2) pair");
  const CMatrix& a = rep.generator(0);
  const CMatrix& b = rep.generator(1);
  TraceTuple t;
  t.push("tr(x1)", a.trace());
  t.push("tr(x2)", b.trace());
  t.push("tr(x1x2)", (a * b).trace());
  t.push("det(x1)", a.determinant());
  t.push("det(x2)", b.determinant());
  return t;
}

inline TraceTuple det_map(const Representation& rep) {
  TraceTuple t;
  for (std::size_t i = 0; i < rep.r(); ++i) t.push("det(x" + std::to_string(i + 1) + ")", rep.generator(i).determinant());
  return t;
}

/// x_i = lambda_i s_i with det s_i = 1 and lambda_i the principal n-th root
/// of det x_i. The unit-determinant part is labelled SL (SU for compact
/// input).
struct TwistSplit {
  Representation unit_det;
  TraceTuple torus;

  /// lambda_i s_i for every generator.
  Representation reconstruct(Family family) const {
    std::vector<CMatrix> gens;
    for (std::size_t i = 0; i < unit_det.r(); ++i) gens.push_back(torus.values[i] * unit_det.generator(i));
    return {GroupSpec(family, unit_det.n()), std::move(gens)};
  }
};

inline TwistSplit twist_split(const Representation& rep) {
  std::vector<CMatrix> gens;
  TraceTuple torus;
  for (std::size_t i = 0; i < rep.r(); ++i) {
    const CMatrix& x = rep.generator(i);
    const complex lambda = principal_root(x.determinant(), rep.n());
    if (lambda == 0.0) throw invalid_input_error("twist_split: singular generator");
    gens.push_back(x / lambda);
    torus.push("lambda" + std::to_string(i + 1), lambda);
  }
  const Family f = rep.spec().compact() ? Family::SU : Family::SL;
  return {Representation(GroupSpec(f, rep.n()), std::move(gens)), std::move(torus)};
}

} // namespace charvar
