#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "charvar/group.hpp"
#include "charvar/numlin.hpp"

namespace charvar {

/// A point of R_r(G) = G^r: one n x n matrix per free generator.
///
/// Construction checks shape only. Group constraints are checked by
/// validate(), since sampled or file-loaded matrices satisfy them only up to
/// rounding.
class Representation {
public:
  Representation(GroupSpec spec, std::vector<CMatrix> generators)
      : spec_(spec), generators_(std::move(generators)) {
    if (generators_.empty()) throw structural_error("representation needs at least one generator");
    const auto n = static_cast<Eigen::Index>(spec_.n);
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      const CMatrix& x = generators_[i];
      if (x.rows() != n || x.cols() != n)
        throw structural_error("generator " + std::to_string(i + 1) + " is " + std::to_string(x.rows()) +
                               "x" + std::to_string(x.cols()) + ", expected " + std::to_string(n) + "x" +
                               std::to_string(n));
      require_finite(x);
    }
  }

  const GroupSpec& spec() const { return spec_; }
  Family family() const { return spec_.family; }
  std::size_t n() const { return spec_.n; }
  std::size_t r() const { return generators_.size(); }
  const std::vector<CMatrix>& generators() const { return generators_; }
  const CMatrix& generator(std::size_t i) const { return generators_.at(i); }

  /// Same matrices, read as a point of a different group.
  Representation with_family(Family f) const { return {GroupSpec(f, spec_.n), generators_}; }

private:
  GroupSpec spec_;
  std::vector<CMatrix> generators_;
};

enum class ViolationKind { unitarity, determinant, singular };

inline std::string_view to_string(ViolationKind k) {
  switch (k) {
  case ViolationKind::unitarity: return "unitarity";
  case ViolationKind::determinant: return "determinant";
  case ViolationKind::singular: return "singular";
  }
  return "?";
}

struct Violation {
  std::size_t generator; ///< zero based
  ViolationKind kind;
  double defect;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }

  std::string describe() const {
    std::ostringstream os;
    for (const auto& v : violations)
      os << "generator " << v.generator + 1 << ": " << to_string(v.kind) << " defect " << v.defect << "; ";
    return os.str();
  }
};

/// Checks every generator against the group constraints. Defects are measured
/// against tol.rel_eps scaled by n; invertibility against tol.abs_eps.
inline ValidationReport validate(const Representation& rep, const Tolerance& tol = {}) {
  ValidationReport report;
  const double n = static_cast<double>(rep.n());
  for (std::size_t i = 0; i < rep.r(); ++i) {
    const CMatrix& x = rep.generator(i);
    const complex det = x.determinant();
    if (std::abs(det) <= tol.abs_eps) report.violations.push_back({i, ViolationKind::singular, std::abs(det)});
    if (is_compact(rep.family())) {
      const double d = unitarity_defect(x);
      if (d > tol.rel_eps * std::sqrt(n)) report.violations.push_back({i, ViolationKind::unitarity, d});
    }
    if (has_unit_det(rep.family())) {
      const double d = std::abs(det - 1.0);
      if (d > tol.rel_eps * n) report.violations.push_back({i, ViolationKind::determinant, d});
    }
  }
  return report;
}

inline void require_valid(const Representation& rep, const Tolerance& tol = {}) {
  const auto report = validate(rep, tol);
  if (!report.ok()) throw invalid_input_error("not a valid " + rep.spec().name() + " representation: " + report.describe());
}

/// A word in the free group: letter k > 0 is x_k, letter -k is x_k^{-1}.
struct Word {
  std::vector<int> letters;

  Word() = default;
  Word(std::initializer_list<int> l) : letters(l) {}
  explicit Word(std::vector<int> l) : letters(std::move(l)) {}

  std::size_t length() const { return letters.size(); }

  Word operator*(const Word& other) const {
    Word w = *this;
    w.letters.insert(w.letters.end(), other.letters.begin(), other.letters.end());
    return w;
  }

  /// "x1x2^-1"; the empty word is "1".
  std::string label() const {
    if (letters.empty()) return "1";
    std::string s;
    for (int l : letters) {
      s += "x" + std::to_string(std::abs(l));
      if (l < 0) s += "^-1";
    }
    return s;
  }

  friend bool operator==(const Word&, const Word&) = default;
};

/// All freely reduced words of length <= max_length in r letters, ordered by
/// length and then lexicographically by letter (x1, x1^-1, x2, ...).
inline std::vector<Word> reduced_words(std::size_t r, std::size_t max_length) {
  std::vector<int> alphabet;
  for (int i = 1; i <= static_cast<int>(r); ++i) {
    alphabet.push_back(i);
    alphabet.push_back(-i);
  }
  std::vector<Word> out{Word{}};
  std::vector<Word> frontier{Word{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (int a : alphabet) {
        if (!w.letters.empty() && w.letters.back() == -a) continue;
        Word v = w;
        v.letters.push_back(a);
        next.push_back(std::move(v));
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

/// Ordered product of generators and inverses; empty word gives the identity.
inline CMatrix evaluate_word(const Representation& rep, const Word& w) {
  const auto n = static_cast<Eigen::Index>(rep.n());
  CMatrix acc = CMatrix::Identity(n, n);
  for (int l : w.letters) {
    const auto idx = static_cast<std::size_t>(std::abs(l));
    if (l == 0 || idx > rep.r())
      throw structural_error("word letter " + std::to_string(l) + " out of range for rank " + std::to_string(rep.r()));
    const CMatrix& x = rep.generator(idx - 1);
    if (l > 0)
      acc = acc * x;
    else
      acc = x.transpose().partialPivLu().solve(acc.transpose()).transpose(); // acc * x^{-1}
  }
  return acc;
}

/// rho -> g rho g^{-1}. For compact families g must be unitary.
inline Representation conjugate(const Representation& rep, const CMatrix& g, const Tolerance& tol = {}) {
  const auto n = static_cast<Eigen::Index>(rep.n());
  if (g.rows() != n || g.cols() != n) throw structural_error("conjugate: conjugator has the wrong size");
  require_finite(g);
  if (rank(g, tol) < rep.n() || std::abs(g.determinant()) <= tol.abs_eps)
    throw invalid_input_error("conjugate: conjugator is singular");
  if (rep.spec().compact() && unitarity_defect(g) > tol.rel_eps * std::sqrt(static_cast<double>(n)))
    throw invalid_input_error("conjugate: compact representations need a unitary conjugator");
  Eigen::PartialPivLU<CMatrix> lu(g);
  std::vector<CMatrix> gens;
  gens.reserve(rep.r());
  for (const auto& x : rep.generators()) {
    // (g x) g^{-1} = ((g^{-1})^T (g x)^T)^T, via g^T solve.
    const CMatrix gx = g * x;
    gens.push_back(g.transpose().partialPivLu().solve(gx.transpose()).transpose());
  }
  return {rep.spec(), std::move(gens)};
}

inline CMatrix block_diag(const CMatrix& a, const CMatrix& b) {
  CMatrix m = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

/// Block-diagonal sum. Without an explicit family the result is U when both
/// inputs are compact and GL otherwise; a requested family is validated.
inline Representation direct_sum(const Representation& a, const Representation& b,
                                 std::optional<Family> family = std::nullopt, const Tolerance& tol = {}) {
  if (a.r() != b.r())
    throw structural_error("direct_sum: ranks differ (" + std::to_string(a.r()) + " vs " + std::to_string(b.r()) + ")");
  const Family f = family.value_or(a.spec().compact() && b.spec().compact() ? Family::U : Family::GL);
  std::vector<CMatrix> gens;
  gens.reserve(a.r());
  for (std::size_t i = 0; i < a.r(); ++i) gens.push_back(block_diag(a.generator(i), b.generator(i)));
  Representation out(GroupSpec(f, a.n() + b.n()), std::move(gens));
  if (family) require_valid(out, tol);
  return out;
}

inline Representation identity_rep(GroupSpec spec, std::size_t r) {
  const auto n = static_cast<Eigen::Index>(spec.n);
  return {spec, std::vector<CMatrix>(r, CMatrix::Identity(n, n))};
}

} // namespace charvar
