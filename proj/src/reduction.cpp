#include "fanoqc/reduction.hpp"

#include <sstream>

namespace fanoqc {

namespace {

std::string entry_label(int r, int c) {
  return "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
}

}  // namespace

std::string AdaptedReport::summary() const {
  std::ostringstream os;
  os << "(P) " << (polynomial ? "pass" : "FAIL") << "  (H) " << (homogeneous ? "pass" : "FAIL")
     << "  (I) " << (initial ? "pass" : "FAIL") << "  (N) " << (normalized ? "pass" : "FAIL");
  for (const auto& v : violations)
    os << "\n  (" << v.condition << ") entry " << entry_label(v.row - 1, v.col - 1) << ": "
       << v.detail;
  return os.str();
}

AdaptedReport adapted_check(const AdaptedFamily& f) {
  const PolyMatrix& R = f.R;
  int dim = R.dim();
  int N = f.params.N, k = f.params.k;
  AdaptedReport rep;

  auto flag = [&rep](char cond, int r, int c, std::string detail) {
    switch (cond) {
      case 'P': rep.polynomial = false; break;
      case 'H': rep.homogeneous = false; break;
      case 'I': rep.initial = false; break;
      case 'N': rep.normalized = false; break;
    }
    rep.violations.push_back({cond, r + 1, c + 1, std::move(detail)});
  };

  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const QHPoly& e = R.at(i, j);
      if (!e.is_h_polynomial()) flag('P', i, j, "negative h-exponent in " + e.str());
      // (1/h)R homogeneous: entry at offset n = j - i has weight 2n + 2.
      int want = 2 * (j - i) + 2;
      for (const auto& [m, c] : e.terms())
        if (monomial_weight(m, N, k) != want)
          flag('H', i, j,
               "monomial q^" + std::to_string(m.q) + " h^" + std::to_string(m.h) +
                   " has weight " + std::to_string(monomial_weight(m, N, k)) + ", expected " +
                   std::to_string(want));
    }

  PolyMatrix at0 = R.at_q0();
  if (at0 != PolyMatrix::sub_identity(dim)) {
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        QHPoly want = (i == j + 1) ? QHPoly(1) : QHPoly();
        if (at0.at(i, j) != want)
          flag('I', i, j, "R(0) entry is " + at0.at(i, j).str() + ", expected " + want.str());
      }
  }

  for (int j = 0; j + 1 < dim; ++j)
    if (!R.at(j + 1, j).is_one())
      flag('N', j + 1, j, "(-1)-diagonal entry is " + R.at(j + 1, j).str() + ", expected 1");

  return rep;
}

bool is_adapted_gauge(const PolyMatrix& u, const FanoParams& p) {
  int dim = u.dim();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const QHPoly& e = u.at(i, j);
      if (!e.is_h_polynomial()) return false;
      if (!homogeneous_of_degree(e, p.N, p.k, 2 * (j - i))) return false;
    }
  return u.at_q0().is_identity();
}

DiffOperator reduced_operator(const AdaptedFamily& f) {
  AdaptedReport rep = adapted_check(f);
  if (!rep.pass()) throw NotAdapted("family is not adapted: " + rep.summary());

  int dim = f.params.dim();
  std::vector<DiffOperator> ops;
  ops.reserve(static_cast<size_t>(dim) + 1);
  ops.push_back(DiffOperator(QHPoly(1)));
  for (int beta = 0; beta < dim; ++beta) {
    DiffOperator next = ops.back().apply_hd();
    for (int alpha = 0; alpha <= beta; ++alpha) {
      const QHPoly& r = f.R.at(alpha, beta);
      if (!r.is_zero()) next -= ops[static_cast<size_t>(alpha)].left_mul(r);
    }
    ops.push_back(std::move(next));
  }
  return ops.back();
}

AdaptedFamily gauge_transform(const PolyMatrix& u, const AdaptedFamily& f) {
  PolyMatrix u_inv = u.unipotent_inverse();
  PolyMatrix r = u_inv * u.euler_derivative().shifted(BigRat(1), 0, 1) + u_inv * f.R * u;
  return AdaptedFamily{f.params, std::move(r), {}};
}

}  // namespace fanoqc
