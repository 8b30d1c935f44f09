#pragma once

#include <string>
#include <string_view>

#include "charvar/representation.hpp"
#include "charvar/structure.hpp"

namespace charvar {

/// How random_rep() builds its generators.
struct RepMode {
  enum class Kind { generic, reduced, central, identity };
  Kind kind = Kind::generic;
  std::size_t n1 = 0;
  std::size_t n2 = 0;

  static RepMode generic() { return {Kind::generic, 0, 0}; }
  static RepMode reduced(std::size_t a, std::size_t b) { return {Kind::reduced, a, b}; }
  static RepMode central() { return {Kind::central, 0, 0}; }
  static RepMode identity() { return {Kind::identity, 0, 0}; }

  /// "generic", "central", "identity" or "reduced:N1,N2".
  static RepMode parse(std::string_view s) {
    if (s == "generic") return generic();
    if (s == "central") return central();
    if (s == "identity") return identity();
    constexpr std::string_view prefix = "reduced:";
    if (s.substr(0, prefix.size()) == prefix) {
      const std::string body(s.substr(prefix.size()));
      const auto comma = body.find(',');
      if (comma != std::string::npos) {
        try {
          std::size_t used1 = 0, used2 = 0;
          const auto a = std::stoul(body.substr(0, comma), &used1);
          const auto rest = body.substr(comma + 1);
          const auto b = std::stoul(rest, &used2);
          if (used1 == comma && used2 == rest.size()) return reduced(a, b);
        } catch (const std::exception&) {
        }
      }
    }
    throw invalid_input_error("unknown mode '" + std::string(s) + "' (expected generic, central, identity or reduced:N1,N2)");
  }

  std::string name() const {
    switch (kind) {
    case Kind::generic: return "generic";
    case Kind::central: return "central";
    case Kind::identity: return "identity";
    case Kind::reduced: return "reduced:" + std::to_string(n1) + "," + std::to_string(n2);
    }
    return "?";
  }
};

namespace detail {

inline std::vector<CMatrix> sample_generators(Family f, std::size_t n, std::size_t r, Rng& rng) {
  std::vector<CMatrix> gens;
  for (std::size_t i = 0; i < r; ++i) gens.push_back(sample_group_element(f, n, rng));
  return gens;
}

inline std::vector<CMatrix> sample_irreducible(Family f, std::size_t n, std::size_t r, Rng& rng, const Tolerance& tol) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    auto gens = sample_generators(f, n, r, rng);
    if (n == 1 || is_irreducible(Representation(GroupSpec(f, n), gens), tol)) return gens;
  }
  throw internal_error("random_rep: no irreducible factor after 100 draws");
}

} // namespace detail

/// Seeded random point of R_r(G).
///
/// generic:  i.i.d. sample_group_element draws.
/// reduced:  blockdiag(A_i, B_i) with A, B irreducible of sizes n1, n2. For
///           SL/SU the first block is divided by the principal n1-th root of
///           det(A_i) det(B_i).
/// central:  scalar matrices in G (roots of unity for SL/SU).
/// identity: every generator the identity.
inline Representation random_rep(GroupSpec spec, std::size_t r, const RepMode& mode, std::uint64_t seed,
                                 const Tolerance& tol = {}) {
  if (r < 1) throw invalid_input_error("random_rep: rank must be >= 1");
  Rng rng(seed);
  const std::size_t n = spec.n;
  const auto N = static_cast<Eigen::Index>(n);
  switch (mode.kind) {
  case RepMode::Kind::identity: return identity_rep(spec, r);
  case RepMode::Kind::generic: return {spec, detail::sample_generators(spec.family, n, r, rng)};
  case RepMode::Kind::central: {
    std::vector<CMatrix> gens;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    for (std::size_t i = 0; i < r; ++i) {
      complex s;
      switch (spec.family) {
      case Family::GL: s = sample_group_element(Family::GL, 1, rng)(0, 0); break;
      case Family::U: s = std::polar(1.0, angle(rng)); break;
      default: s = std::polar(1.0, 2.0 * M_PI * static_cast<double>(pick(rng)) / static_cast<double>(n)); break;
      }
      gens.push_back(s * CMatrix::Identity(N, N));
    }
    return {spec, std::move(gens)};
  }
  case RepMode::Kind::reduced: {
    if (mode.n1 < 1 || mode.n2 < 1 || mode.n1 + mode.n2 != n)
      throw invalid_input_error("random_rep: reduced type " + mode.name() + " does not fit " + spec.name());
    if (r == 1 && std::max(mode.n1, mode.n2) > 1)
      throw invalid_input_error("random_rep: rank-1 representations have no irreducible factor of size > 1");
    const Family factor = spec.compact() ? Family::U : Family::GL;
    const auto a = detail::sample_irreducible(factor, mode.n1, r, rng, tol);
    const auto b = detail::sample_irreducible(factor, mode.n2, r, rng, tol);
    std::vector<CMatrix> gens;
    for (std::size_t i = 0; i < r; ++i) {
      CMatrix top = a[i];
      if (has_unit_det(spec.family)) top /= principal_root(a[i].determinant() * b[i].determinant(), mode.n1);
      gens.push_back(block_diag(top, b[i]));
    }
    return {spec, std::move(gens)};
  }
  }
  throw invalid_input_error("random_rep: unknown mode");
}

} // namespace charvar
