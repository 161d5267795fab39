#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fanoqc/qhpoly.hpp"

namespace fanoqc {

/// Square matrix of QHPoly entries, 0-based internally. The diag_n band
/// constructors follow the 1-based E_{i,j} convention (diag_n = sum of
/// a_i E_{i,n+i} for n >= 0, a_i E_{i-n,i} for n < 0) so emitted matrices
/// line up with the usual presentation.
class PolyMatrix {
 public:
  explicit PolyMatrix(int dim);
  static PolyMatrix identity(int dim);
  /// diag_n: values on the diagonal offset n. For n >= 0 entry (i, i+n),
  /// for n < 0 entry (i+|n|, i); values.size() must be dim - |n|.
  static PolyMatrix diag_band(int dim, int n, std::vector<QHPoly> values);
  /// I_{-1}: ones on the first subdiagonal.
  static PolyMatrix sub_identity(int dim);

  int dim() const { return dim_; }
  QHPoly& at(int r, int c) { return e_[static_cast<size_t>(r) * dim_ + c]; }
  const QHPoly& at(int r, int c) const { return e_[static_cast<size_t>(r) * dim_ + c]; }

  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  PolyMatrix operator-() const;
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.dim_ == b.dim_ && a.e_ == b.e_;
  }
  friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

  /// Entry-wise multiplication by a polynomial.
  PolyMatrix scaled(const QHPoly& p) const;
  /// Entry-wise multiplication by c*q^dq*h^dh.
  PolyMatrix shifted(const BigRat& c, int dq, int dh) const;
  PolyMatrix transpose() const;
  PolyMatrix at_q0() const;
  /// Entry-wise Euler derivative q d/dq.
  PolyMatrix euler_derivative() const;

  bool is_zero() const;
  bool is_identity() const;
  /// All entries free of h (and of 1/h)?
  bool is_h_free() const;
  /// Every nonzero entry lies on the diagonal offset n?
  bool is_n_diagonal(int n) const;
  /// Minimal and maximal diagonal offsets carrying a nonzero entry.
  std::optional<std::pair<int, int>> band_range() const;
  /// The n-diagonal component as a value list (length dim - |n|).
  std::vector<QHPoly> diagonal_component(int n) const;

  /// Exact inverse of I + strictly-upper-triangular via the finite
  /// Neumann series. Throws NotUnipotent otherwise.
  PolyMatrix unipotent_inverse() const;

 private:
  int dim_;
  std::vector<QHPoly> e_;
};

inline PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b) {
  return a * b - b * a;
}

}  // namespace fanoqc
