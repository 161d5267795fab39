#pragma once

#include <random>

#include "fanoqc/poly_matrix.hpp"

namespace test_support {

using fanoqc::BigRat;
using fanoqc::PolyMatrix;
using fanoqc::QHPoly;

inline BigRat random_rat(std::mt19937& rng, int lim = 9) {
  std::uniform_int_distribution<int> num(-lim, lim);
  std::uniform_int_distribution<int> den(1, 4);
  return BigRat(num(rng), den(rng));
}

inline QHPoly random_poly(std::mt19937& rng, int max_terms = 3, int max_q = 3, int min_h = 0,
                          int max_h = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> qe(0, max_q);
  std::uniform_int_distribution<int> he(min_h, max_h);
  QHPoly p;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) p += QHPoly::monomial(random_rat(rng), qe(rng), he(rng));
  return p;
}

inline PolyMatrix random_unipotent(std::mt19937& rng, int dim) {
  PolyMatrix m = PolyMatrix::identity(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) m.at(i, j) = random_poly(rng);
  return m;
}

// Dense row-by-column product written independently of PolyMatrix::operator*.
inline PolyMatrix naive_mul(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      QHPoly sum;
      for (int l = 0; l < a.dim(); ++l) sum += a.at(i, l) * b.at(l, j);
      r.at(i, j) = sum;
    }
  return r;
}

}  // namespace test_support
