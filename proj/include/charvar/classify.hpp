#pragma once

#include <cmath>
#include <string>

#include "charvar/cohomology.hpp"
#include "charvar/structure.hpp"

namespace charvar {

enum class PointStatus { smooth, singular };
enum class VerdictReason { irreducible, exceptional_small_case, reducible_generic_case };

inline std::string_view to_string(PointStatus s) { return s == PointStatus::smooth ? "smooth" : "singular"; }

inline std::string_view to_string(VerdictReason r) {
  switch (r) {
  case VerdictReason::irreducible: return "irreducible";
  case VerdictReason::exceptional_small_case: return "exceptional-small-case";
  case VerdictReason::reducible_generic_case: return "reducible-generic-case";
  }
  return "?";
}

struct Verdict {
  PointStatus status = PointStatus::smooth;
  VerdictReason reason = VerdictReason::irreducible;
  Family family = Family::GL;
  std::size_t r = 0;
  std::size_t n = 0;
};

/// n = 1, r = 1 and (r, n) = (2, 2): the whole moduli space is smooth.
constexpr bool is_exceptional_small_case(std::size_t r, std::size_t n) { return n == 1 || r == 1 || (r == 2 && n == 2); }

/// Smooth/singular verdict at [rho].
///
/// The small cases are decided by lookup. Otherwise [rho] is smooth exactly
/// when rho is irreducible. A reducible GL/SL input must be decomposable
/// (block diagonal or unitary), i.e. already the polystable representative.
inline Verdict classify_point(const Representation& rep, const Tolerance& tol = {}, std::uint64_t seed = 0) {
  Verdict v;
  v.family = rep.family();
  v.r = rep.r();
  v.n = rep.n();
  if (is_exceptional_small_case(v.r, v.n)) {
    v.status = PointStatus::smooth;
    v.reason = VerdictReason::exceptional_small_case;
    return v;
  }
  if (is_irreducible(rep, tol)) {
    v.status = PointStatus::smooth;
    v.reason = VerdictReason::irreducible;
    return v;
  }
  if (!rep.spec().compact()) (void)decompose(rep, tol, seed);
  v.status = PointStatus::singular;
  v.reason = VerdictReason::reducible_generic_case;
  return v;
}

/// Number of irreducible summands minus one.
inline std::size_t stratum_index(const Representation& rep, const Tolerance& tol = {}, std::uint64_t seed = 0) {
  return decompose(rep, tol, seed).block_count() - 1;
}

struct Dimension {
  std::size_t value = 0;
  Field field = Field::complex;
  friend bool operator==(const Dimension&, const Dimension&) = default;
};

/// Dimension of X_r(G): complex for GL/SL, real for U/SU.
inline Dimension moduli_dim(const GroupSpec& spec, std::size_t r) {
  if (r < 1) throw invalid_input_error("moduli_dim: rank must be >= 1");
  const std::size_t n = spec.n;
  std::size_t d = 0;
  if (has_unit_det(spec.family))
    d = r == 1 ? n - 1 : (n * n - 1) * (r - 1);
  else
    d = r == 1 ? n : n * n * (r - 1) + 1;
  return {d, spec.field()};
}

struct ManifoldAnswer {
  bool manifold = false;
  std::string note;
};

/// Is X_r(G) a topological manifold (possibly with boundary)?
inline ManifoldAnswer is_manifold(const GroupSpec& spec, std::size_t r) {
  const std::size_t n = spec.n;
  if (r < 1) throw invalid_input_error("is_manifold: rank must be >= 1");
  if (n == 1) return {true, spec.compact() ? "torus" : "affine torus"};
  if (r == 1) return {true, spec.compact() ? "quotient of a maximal torus by the Weyl group; has boundary" : "affine space"};
  if (r == 2 && n == 2) return {true, spec.compact() ? "closed 3-ball; has boundary" : "affine 3-space"};
  if (spec.compact() && ((r == 2 && n == 3) || (r == 3 && n == 2))) return {true, "sphere"};
  return {false, "not a manifold, with or without boundary"};
}

enum class ConeKind { none, cone_over_cp, affine_segre_cone };

/// Local model of X_r(G) near [rho]: a Euclidean factor (R^d for compact
/// families, C^d otherwise) times a cone.
///
/// cone_over_cp:      real cone over CP^{m-1}, real dimension 2m - 1.
/// affine_segre_cone: affine cone over CP^{m-1} x CP^{m-1} (rank <= 1
///                    m x m matrices), complex dimension 2m - 1.
struct LocalModel {
  std::size_t euclidean_dim = 0;
  Field field = Field::complex;
  ConeKind cone = ConeKind::none;
  std::size_t m = 0;

  std::size_t cone_dim() const { return cone == ConeKind::none ? 0 : 2 * m - 1; }
  std::size_t total_dim() const { return euclidean_dim + cone_dim(); }

  /// "R^3 x Cone(CP^1)", "C^3 x AffineCone(CP^1 x CP^1)", "C^6".
  std::string describe() const {
    const std::string e = std::string(field == Field::real ? "R^" : "C^") + std::to_string(euclidean_dim);
    const std::string cp = "CP^" + std::to_string(m - (m > 0 ? 1 : 0));
    switch (cone) {
    case ConeKind::none: return e;
    case ConeKind::cone_over_cp: return e + " x Cone(" + cp + ")";
    case ConeKind::affine_segre_cone: return e + " x AffineCone(" + cp + " x " + cp + ")";
    }
    return e;
  }
};

/// Local model at an irreducible point or a point with exactly two
/// irreducible summands of sizes n1, n2, where m = (r-1) n1 n2:
///
///   SU: R^{(r-1)(n1^2+n2^2-1)+1} x Cone(CP^{m-1})
///   U:  R^{(r-1)(n1^2+n2^2)+2}   x Cone(CP^{m-1})
///   GL: C^{(n1^2+n2^2)(r-1)+2}   x AffineCone(CP^{m-1} x CP^{m-1})
///   SL: C^{(n1^2+n2^2-1)(r-1)+1} x AffineCone(CP^{m-1} x CP^{m-1})
///
/// The SL Euclidean dimension is moduli_dim minus the cone dimension. When
/// m = 0 (rank one) the cone is a point and is dropped.
inline LocalModel local_model(const Representation& rep, const Tolerance& tol = {}, std::uint64_t seed = 0) {
  const GroupSpec& spec = rep.spec();
  LocalModel lm;
  lm.field = spec.field();
  if (is_irreducible(rep, tol)) {
    lm.euclidean_dim = moduli_dim(spec, rep.r()).value;
    return lm;
  }
  const auto profile = decompose(rep, tol, seed);
  const auto type = reduced_type(profile);
  if (!type)
    throw unsupported_input_error("local_model: " + std::to_string(profile.block_count()) +
                                  " irreducible summands; only irreducible and two-summand points have a model");
  const auto [n1, n2] = *type;
  const std::size_t r1 = rep.r() - 1;
  const std::size_t sq = n1 * n1 + n2 * n2;
  lm.m = r1 * n1 * n2;
  switch (spec.family) {
  case Family::SU: lm.euclidean_dim = r1 * (sq - 1) + 1; break;
  case Family::U: lm.euclidean_dim = r1 * sq + 2; break;
  case Family::GL: lm.euclidean_dim = sq * r1 + 2; break;
  case Family::SL: lm.euclidean_dim = (sq - 1) * r1 + 1; break;
  }
  if (lm.m > 0) lm.cone = spec.compact() ? ConeKind::cone_over_cp : ConeKind::affine_segre_cone;
  return lm;
}

/// Outcome of checking the rank-one description of the weight-k C^* quotient
/// of C^n x C^n.
struct SegreReport {
  std::size_t samples = 0;
  std::size_t rank_pass = 0;       ///< rank(z w^T) == 1
  std::size_t invariance_pass = 0; ///< z_i w_j unchanged by 20 random lambda
  std::size_t minors_pass = 0;     ///< every 2x2 minor vanishes
  bool origin_rank_zero = false;   ///< (z, w) = (0, 0) maps to the zero matrix
  double max_invariance_defect = 0.0;
  double max_minor = 0.0;

  bool all_pass() const {
    return origin_rank_zero && rank_pass == samples && invariance_pass == samples && minors_pass == samples;
  }
};

/// Samples (z, w) in C^n x C^n under lambda.(z, w) = (lambda^k z, lambda^-k w)
/// and checks that x_ij = z_i w_j is invariant and has rank <= 1. Defects are
/// relative to max(1, |x|) (invariance) and max(1, |x|^2) (minors), with
/// threshold 1e-10.
inline SegreReport segre_cone_sample(std::size_t n, int k, std::size_t count, std::uint64_t seed,
                                     const Tolerance& tol = {}) {
  if (n < 1) throw invalid_input_error("segre_cone_sample: n must be >= 1");
  constexpr double threshold = 1e-10;
  Rng rng(seed);
  std::uniform_real_distribution<double> log_modulus(std::log(0.5), std::log(2.0));
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  const auto N = static_cast<Eigen::Index>(n);

  SegreReport rep;
  rep.samples = count;
  rep.origin_rank_zero = rank(CVector::Zero(N) * CVector::Zero(N).transpose(), tol) == 0;
  for (std::size_t s = 0; s < count; ++s) {
    const CVector z = random_complex_normal(n, 1, rng);
    const CVector w = random_complex_normal(n, 1, rng);
    const CMatrix x = z * w.transpose();
    const double xs = std::max(1.0, x.norm());
    if (rank(x, tol) == 1) ++rep.rank_pass;

    double inv = 0.0;
    for (int t = 0; t < 20; ++t) {
      const complex lambda = std::polar(std::exp(log_modulus(rng)), phase(rng));
      const complex lk = std::pow(lambda, k);
      const CMatrix moved = (lk * z) * (w / lk).transpose();
      inv = std::max(inv, (moved - x).cwiseAbs().maxCoeff() / xs);
    }
    rep.max_invariance_defect = std::max(rep.max_invariance_defect, inv);
    if (inv <= threshold) ++rep.invariance_pass;

    double minor = 0.0;
    for (Eigen::Index i = 0; i < N; ++i)
      for (Eigen::Index j = i + 1; j < N; ++j)
        for (Eigen::Index a = 0; a < N; ++a)
          for (Eigen::Index b = a + 1; b < N; ++b)
            minor = std::max(minor, std::abs(x(i, a) * x(j, b) - x(i, b) * x(j, a)));
    minor /= xs * xs;
    rep.max_minor = std::max(rep.max_minor, minor);
    if (minor <= threshold) ++rep.minors_pass;
  }
  return rep;
}

} // namespace charvar
