#include "fanoqc/diff_operator.hpp"

#include <sstream>

namespace fanoqc {

DiffOperator::DiffOperator(QHPoly c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

DiffOperator DiffOperator::hd(int power) {
  DiffOperator r;
  r.c_.assign(static_cast<size_t>(power) + 1, QHPoly());
  r.c_.back() = QHPoly(1);
  return r;
}

DiffOperator DiffOperator::from_coeffs(std::vector<QHPoly> coeffs) {
  DiffOperator r;
  r.c_ = std::move(coeffs);
  r.trim();
  return r;
}

void DiffOperator::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const QHPoly& DiffOperator::coeff(int j) const {
  static const QHPoly kZero;
  if (j < 0 || j >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(j)];
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
  trim();
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
  trim();
  return *this;
}

DiffOperator DiffOperator::operator-() const {
  DiffOperator r;
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(-c);
  return r;
}

DiffOperator DiffOperator::left_mul(const QHPoly& p) const {
  DiffOperator r;
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(p * c);
  r.trim();
  return r;
}

DiffOperator DiffOperator::apply_hd() const {
  // (h∂)(c ψ) = c (h∂)ψ + h (q dc/dq) ψ
  DiffOperator r;
  r.c_.assign(c_.size() + 1, QHPoly());
  for (size_t j = 0; j < c_.size(); ++j) {
    r.c_[j + 1] += c_[j];
    r.c_[j] += c_[j].euler_derivative().shifted(BigRat(1), 0, 1);
  }
  r.trim();
  return r;
}

DiffOperator op_mul(const DiffOperator& a, const DiffOperator& b) {
  DiffOperator r;
  DiffOperator power = b;  // (h∂)^i ∘ b
  for (int i = 0; i <= a.order(); ++i) {
    if (!a.coeff(i).is_zero()) r += power.left_mul(a.coeff(i));
    if (i < a.order()) power = power.apply_hd();
  }
  return r;
}

std::string DiffOperator::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = order(); j >= 0; --j) {
    const QHPoly& c = coeff(j);
    if (c.is_zero()) continue;
    // Pull out a uniform sign when the coefficient is a single term.
    bool negate = c.is_monomial() && c.terms().begin()->second.sign() < 0;
    QHPoly shown = negate ? -c : c;
    if (first) {
      if (negate) os << '-';
    } else {
      os << (negate ? " - " : " + ");
    }
    first = false;
    std::string cs = shown.str();
    if (j == 0) {
      os << (shown.is_monomial() ? cs : "(" + cs + ")");
      continue;
    }
    if (!shown.is_one()) os << (shown.is_monomial() ? cs : "(" + cs + ")") << '*';
    os << "(h∂)";
    if (j != 1) os << '^' << j;
  }
  return os.str();
}

}  // namespace fanoqc
