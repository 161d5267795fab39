#include "fanoqc/poly_matrix.hpp"

#include <cstdlib>
#include <string>

namespace fanoqc {

PolyMatrix::PolyMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw DimMismatch("matrix dimension must be >= 1");
  e_.resize(static_cast<size_t>(dim) * dim);
}

PolyMatrix PolyMatrix::identity(int dim) {
  PolyMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = QHPoly(1);
  return m;
}

PolyMatrix PolyMatrix::diag_band(int dim, int n, std::vector<QHPoly> values) {
  int width = std::abs(n);
  if (width > dim)
    throw LengthMismatch("band offset " + std::to_string(n) + " exceeds dimension " +
                         std::to_string(dim));
  if (static_cast<int>(values.size()) != dim - width)
    throw LengthMismatch("diag_" + std::to_string(n) + " in dimension " + std::to_string(dim) +
                         " needs " + std::to_string(dim - width) + " values, got " +
                         std::to_string(values.size()));
  PolyMatrix m(dim);
  for (int i = 0; i < dim - width; ++i) {
    if (n >= 0)
      m.at(i, i + n) = std::move(values[i]);
    else
      m.at(i + width, i) = std::move(values[i]);
  }
  return m;
}

PolyMatrix PolyMatrix::sub_identity(int dim) {
  return diag_band(dim, -1, std::vector<QHPoly>(static_cast<size_t>(dim) - 1, QHPoly(1)));
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  if (dim_ != o.dim_) throw DimMismatch("matrix addition: dimensions differ");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  if (dim_ != o.dim_) throw DimMismatch("matrix subtraction: dimensions differ");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dim_ != b.dim_) throw DimMismatch("matrix product: dimensions differ");
  int n = a.dim_;
  PolyMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      const QHPoly& ail = a.at(i, l);
      if (ail.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const QHPoly& blj = b.at(l, j);
        if (blj.is_zero()) continue;
        r.at(i, j) += ail * blj;
      }
    }
  return r;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix r(dim_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
  return r;
}

PolyMatrix PolyMatrix::scaled(const QHPoly& p) const {
  PolyMatrix r(dim_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * p;
  return r;
}

PolyMatrix PolyMatrix::shifted(const BigRat& c, int dq, int dh) const {
  PolyMatrix r(dim_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].shifted(c, dq, dh);
  return r;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r.at(j, i) = at(i, j);
  return r;
}

PolyMatrix PolyMatrix::at_q0() const {
  PolyMatrix r(dim_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].at_q0();
  return r;
}

PolyMatrix PolyMatrix::euler_derivative() const {
  PolyMatrix r(dim_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].euler_derivative();
  return r;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_identity() const { return *this == identity(dim_); }

bool PolyMatrix::is_h_free() const {
  for (const auto& p : e_)
    for (const auto& [m, c] : p.terms())
      if (m.h != 0) return false;
  return true;
}

bool PolyMatrix::is_n_diagonal(int n) const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (j - i != n && !at(i, j).is_zero()) return false;
  return true;
}

std::optional<std::pair<int, int>> PolyMatrix::band_range() const {
  std::optional<std::pair<int, int>> r;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      if (at(i, j).is_zero()) continue;
      int n = j - i;
      if (!r)
        r = {n, n};
      else
        r = {std::min(r->first, n), std::max(r->second, n)};
    }
  return r;
}

std::vector<QHPoly> PolyMatrix::diagonal_component(int n) const {
  int width = std::abs(n);
  std::vector<QHPoly> v;
  v.reserve(static_cast<size_t>(dim_ - width));
  for (int i = 0; i < dim_ - width; ++i)
    v.push_back(n >= 0 ? at(i, i + n) : at(i + width, i));
  return v;
}

PolyMatrix PolyMatrix::unipotent_inverse() const {
  for (int i = 0; i < dim_; ++i) {
    if (!at(i, i).is_one())
      throw NotUnipotent("diagonal entry (" + std::to_string(i + 1) + "," +
                         std::to_string(i + 1) + ") is not 1");
    for (int j = 0; j < i; ++j)
      if (!at(i, j).is_zero())
        throw NotUnipotent("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           ") below the diagonal is nonzero");
  }
  PolyMatrix u = *this - identity(dim_);
  // (I + U)^{-1} = I - U + U^2 - ... ; U is nilpotent of index <= dim.
  PolyMatrix inv = identity(dim_);
  for (int step = 1; step < dim_; ++step) inv = identity(dim_) - u * inv;
  return inv;
}

}  // namespace fanoqc
