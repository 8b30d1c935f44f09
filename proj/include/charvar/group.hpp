#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "charvar/errors.hpp"

namespace charvar {

/// The four matrix groups handled by the library.
enum class Family { GL, SL, U, SU };

enum class Field { real, complex };

inline std::string_view to_string(Family f) {
  switch (f) {
  case Family::GL: return "GL";
  case Family::SL: return "SL";
  case Family::U: return "U";
  case Family::SU: return "SU";
  }
  return "?";
}

inline std::string_view to_string(Field f) { return f == Field::real ? "real" : "complex"; }

inline Family parse_family(std::string_view s) {
  if (s == "GL") return Family::GL;
  if (s == "SL") return Family::SL;
  if (s == "U") return Family::U;
  if (s == "SU") return Family::SU;
  throw invalid_input_error("unknown group family '" + std::string(s) + "'");
}

constexpr bool is_compact(Family f) { return f == Family::U || f == Family::SU; }
constexpr bool has_unit_det(Family f) { return f == Family::SL || f == Family::SU; }

/// Complexification of a compact family (U -> GL, SU -> SL); identity otherwise.
constexpr Family complexification(Family f) {
  switch (f) {
  case Family::U: return Family::GL;
  case Family::SU: return Family::SL;
  default: return f;
  }
}

/// G = GL(n), SL(n), U(n) or SU(n).
struct GroupSpec {
  Family family = Family::GL;
  std::size_t n = 1;

  GroupSpec() = default;
  GroupSpec(Family f, std::size_t dim) : family(f), n(dim) {
    if (n < 1) throw invalid_input_error("group dimension must be >= 1");
  }

  /// Complex dimension for GL/SL, real dimension for U/SU.
  std::size_t lie_dim() const { return has_unit_det(family) ? n * n - 1 : n * n; }
  Field field() const { return is_compact(family) ? Field::real : Field::complex; }
  bool compact() const { return is_compact(family); }

  std::string name() const { return std::string(to_string(family)) + "(" + std::to_string(n) + ")"; }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

} // namespace charvar
