#pragma once

#include <string>
#include <vector>

#include "fanoqc/qhpoly.hpp"

namespace fanoqc {

/// Element of the Weyl-type algebra in q, h and h∂ (∂ = q d/dq), kept in the
/// normal form sum_j c_j(q,h) (h∂)^j with all coefficients on the left.
/// Multiplication uses (h∂)∘a = a(h∂) + h·q(da/dq).
class DiffOperator {
 public:
  DiffOperator() = default;
  DiffOperator(QHPoly c);  // NOLINT: order-0 multiplication operator
  static DiffOperator hd(int power = 1);
  static DiffOperator from_coeffs(std::vector<QHPoly> coeffs);

  bool is_zero() const { return c_.empty(); }
  /// Order of the operator; the zero operator has order -1.
  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  /// Left coefficient of (h∂)^j (zero beyond the order).
  const QHPoly& coeff(int j) const;
  const std::vector<QHPoly>& coeffs() const { return c_; }

  DiffOperator& operator+=(const DiffOperator& o);
  DiffOperator& operator-=(const DiffOperator& o);
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  DiffOperator operator-() const;
  friend bool operator==(const DiffOperator& a, const DiffOperator& b) { return a.c_ == b.c_; }
  friend bool operator!=(const DiffOperator& a, const DiffOperator& b) { return !(a == b); }

  /// Left-multiply every coefficient by a polynomial (p ∘ this in the algebra).
  DiffOperator left_mul(const QHPoly& p) const;
  /// (h∂) ∘ this.
  DiffOperator apply_hd() const;

  /// Text form "(h∂)^6 - 3125*q*(h∂)^4 - ...", highest power first,
  /// coefficients in canonical polynomial form.
  std::string str() const;

 private:
  void trim();
  std::vector<QHPoly> c_;  // c_[j] multiplies (h∂)^j; no trailing zeros
};

/// Normal-form product A ∘ B.
DiffOperator op_mul(const DiffOperator& a, const DiffOperator& b);

}  // namespace fanoqc
