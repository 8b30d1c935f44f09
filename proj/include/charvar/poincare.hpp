#pragma once

// Poincare polynomials of X_r(SU(2)) in exact integer arithmetic:
//
//   P_t = 1 + t + t Q(t) / (1 - t^4),   Q = t^2 f_r - h_r,
//   f_r = ((1+t)^r (1+t^2) - (1-t)^r (1-t^2)) / 2,   h_r = (1+t^3)^r,
//
// and the equivalent finite-sum form P_t = 1 + a(t) + b(t).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "charvar/errors.hpp"

namespace charvar {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial in t with arbitrary-precision integer coefficients.
/// coeffs[k] is the coefficient of t^k; no trailing zeros, so the zero
/// polynomial has no coefficients.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static IntPoly constant(BigInt c) { return IntPoly(std::vector<BigInt>{std::move(c)}); }

  /// c * t^k
  static IntPoly monomial(std::size_t k, BigInt c = 1) {
    std::vector<BigInt> v(k + 1);
    v[k] = std::move(c);
    return IntPoly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  /// Degree; throws for the zero polynomial.
  std::size_t degree() const {
    if (is_zero()) throw invalid_input_error("degree of the zero polynomial");
    return coeffs_.size() - 1;
  }

  BigInt coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  BigInt top_coefficient() const { return is_zero() ? BigInt(0) : coeffs_.back(); }

  bool nonnegative() const {
    for (const auto& c : coeffs_)
      if (c < 0) return false;
    return true;
  }

  IntPoly& operator+=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(v));
  }

  IntPoly pow(std::size_t e) const {
    IntPoly acc = constant(1), base = *this;
    while (e > 0) {
      if (e & 1U) acc = acc * base;
      base = base * base;
      e >>= 1U;
    }
    return acc;
  }

  /// Multiply by t^k.
  IntPoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<BigInt> v(k, BigInt(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return IntPoly(std::move(v));
  }

  /// Exact division by an integer; internal_error on a nonzero remainder.
  IntPoly divided_exactly(const BigInt& d) const {
    std::vector<BigInt> v = coeffs_;
    for (auto& c : v) {
      if (c % d != 0) throw internal_error("IntPoly: coefficient not divisible by " + d.str());
      c /= d;
    }
    return IntPoly(std::move(v));
  }

  /// Exact division by 1 - t^m (synthetic division); internal_error when the
  /// remainder is nonzero.
  IntPoly divided_by_one_minus_tm(std::size_t m) const {
    // p = (1 - t^m) q  =>  q_k = p_k + q_{k-m}.
    if (is_zero()) return {};
    if (m == 0) throw invalid_input_error("division by 1 - t^0 = 0");
    const std::size_t deg = degree();
    if (deg < m) throw internal_error("IntPoly: nonzero remainder dividing by 1 - t^" + std::to_string(m));
    std::vector<BigInt> q(deg - m + 1);
    for (std::size_t k = 0; k < q.size(); ++k) q[k] = coeffs_[k] + (k >= m ? q[k - m] : BigInt(0));
    // Remainder terms t^k for k in [deg-m+1, deg] must cancel: p_k + q_{k-m} == 0.
    for (std::size_t k = q.size(); k <= deg; ++k) {
      const BigInt rem = coeffs_[k] + (k >= m && k - m < q.size() ? q[k - m] : BigInt(0));
      if (rem != 0) throw internal_error("IntPoly: nonzero remainder dividing by 1 - t^" + std::to_string(m));
    }
    return IntPoly(std::move(q));
  }

  /// "1 + 4t^6 + t^9"; "0" for the zero polynomial.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const BigInt& c = coeffs_[k];
      if (c == 0) continue;
      const BigInt a = c < 0 ? BigInt(-c) : c;
      if (s.empty())
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      if (k == 0) {
        s += a.str();
        continue;
      }
      if (a != 1) s += a.str();
      s += k == 1 ? "t" : "t^" + std::to_string(k);
    }
    return s;
  }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

/// Row r of Pascal's triangle, C(r, 0..r).
inline std::vector<BigInt> binomial_row(std::size_t r) {
  std::vector<BigInt> row{1};
  for (std::size_t i = 1; i <= r; ++i) {
    std::vector<BigInt> next(i + 1);
    next[0] = next[i] = 1;
    for (std::size_t k = 1; k < i; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  return row;
}

/// C(r, k), zero when k > r.
inline BigInt binomial(std::size_t r, std::size_t k) {
  if (k > r) return 0;
  return binomial_row(r)[k];
}

inline IntPoly f_poly(std::size_t r) {
  if (r < 1) throw invalid_input_error("f_poly: r must be >= 1");
  const IntPoly plus = IntPoly{1, 1}.pow(r) * IntPoly{1, 0, 1};
  const IntPoly minus = IntPoly{1, -1}.pow(r) * IntPoly{1, 0, -1};
  return (plus - minus).divided_exactly(2);
}

inline IntPoly h_poly(std::size_t r) {
  if (r < 1) throw invalid_input_error("h_poly: r must be >= 1");
  const auto c = binomial_row(r);
  std::vector<BigInt> v(3 * r + 1);
  for (std::size_t k = 0; k <= r; ++k) v[3 * k] = c[k];
  return IntPoly(std::move(v));
}

/// 1 + t + t Q / (1 - t^4), Q = t^2 f_r - h_r.
inline IntPoly poincare_poly(std::size_t r) {
  const IntPoly q = f_poly(r).shifted(2) - h_poly(r);
  IntPoly p = IntPoly{1, 1} + q.shifted(1).divided_by_one_minus_tm(4);
  if (!p.nonnegative()) throw internal_error("poincare_poly: negative Betti number for r = " + std::to_string(r));
  return p;
}

/// 1 + sum_k C(r,2k+1) t^{2k+4} (1 + t^4 + ... + t^{4k-4})
///   + sum_k C(r,2k+2) t^{2k+7} (1 + t^4 + ... + t^{4k-4}).
inline IntPoly poincare_poly_ab(std::size_t r) {
  if (r < 1) throw invalid_input_error("poincare_poly_ab: r must be >= 1");
  const auto c = binomial_row(r);
  auto choose = [&](std::size_t k) { return k <= r ? c[k] : BigInt(0); };
  auto geometric = [](std::size_t k) {
    std::vector<BigInt> v(4 * (k - 1) + 1);
    for (std::size_t j = 0; j < k; ++j) v[4 * j] = 1;
    return IntPoly(std::move(v));
  };
  IntPoly p = IntPoly::constant(1);
  for (std::size_t k = 1; 2 * k + 1 <= r; ++k) p += geometric(k).shifted(2 * k + 4) * IntPoly::constant(choose(2 * k + 1));
  for (std::size_t k = 1; 2 * k + 2 <= r; ++k) p += geometric(k).shifted(2 * k + 7) * IntPoly::constant(choose(2 * k + 2));
  return p;
}

enum class ObstructionReason { none, degree_mismatch, top_coefficient, duality };

inline std::string_view to_string(ObstructionReason r) {
  switch (r) {
  case ObstructionReason::none: return "none";
  case ObstructionReason::degree_mismatch: return "degree-mismatch";
  case ObstructionReason::top_coefficient: return "top-coefficient";
  case ObstructionReason::duality: return "duality";
  }
  return "?";
}

/// Result of the Poincare-duality test on a Betti polynomial.
///
/// A pass is only necessary for being a closed orientable manifold. A
/// duality failure with degree == expected_dim and top coefficient 1
/// certifies that the space is not a manifold, with or without boundary
/// (top Betti number 1 excludes boundary). A degree mismatch certifies
/// nothing by itself: compact manifolds with boundary have b_top = 0.
struct ObstructionResult {
  bool passes = true;
  ObstructionReason reason = ObstructionReason::none;
  std::optional<std::size_t> witness;       ///< smallest k with b_k != b_{N-k}
  std::vector<std::size_t> mismatches;      ///< every such k, ascending

  bool certifies_non_manifold() const { return reason == ObstructionReason::duality; }
};

/// Indices k in [0, N] with b_k != b_{N-k}, N = degree(p).
inline std::vector<std::size_t> duality_mismatches(const IntPoly& p) {
  std::vector<std::size_t> out;
  const std::size_t N = p.degree();
  for (std::size_t k = 0; k <= N; ++k)
    if (p.coefficient(k) != p.coefficient(N - k)) out.push_back(k);
  return out;
}

inline ObstructionResult manifold_obstruction(const IntPoly& p, std::size_t expected_dim) {
  if (p.is_zero()) throw invalid_input_error("manifold_obstruction: zero polynomial");
  ObstructionResult res;
  if (p.degree() != expected_dim) {
    res.passes = false;
    res.reason = ObstructionReason::degree_mismatch;
    return res;
  }
  if (p.top_coefficient() != 1) {
    res.passes = false;
    res.reason = ObstructionReason::top_coefficient;
    return res;
  }
  res.mismatches = duality_mismatches(p);
  if (!res.mismatches.empty()) {
    res.passes = false;
    res.reason = ObstructionReason::duality;
    res.witness = res.mismatches.front();
  }
  return res;
}

} // namespace charvar
