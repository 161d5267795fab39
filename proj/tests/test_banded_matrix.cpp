#include <random>

#include "doctest.h"
#include "fanoqc/poly_matrix.hpp"
#include "reference_data.hpp"
#include "test_support.hpp"

using namespace fanoqc;
using test_support::naive_mul;
using test_support::random_poly;
using test_support::random_unipotent;

namespace {

PolyMatrix const_diag(int dim, int n, std::vector<long> values) {
  std::vector<QHPoly> polys;
  polys.reserve(values.size());
  for (long v : values) polys.emplace_back(BigRat(v));
  return PolyMatrix::diag_band(dim, n, std::move(polys));
}

}  // namespace

TEST_CASE("diag band placement") {
  PolyMatrix sub = PolyMatrix::diag_band(6, -1, std::vector<QHPoly>(5, QHPoly(1)));
  CHECK(sub == PolyMatrix::sub_identity(6));
  for (int i = 0; i < 5; ++i) CHECK(sub.at(i + 1, i).is_one());
  CHECK(sub.is_n_diagonal(-1));

  PolyMatrix top = const_diag(6, 5, {120});
  CHECK(top.at(0, 5) == QHPoly(120));
  CHECK(top.is_n_diagonal(5));

  CHECK_THROWS_AS(PolyMatrix::diag_band(4, 0, std::vector<QHPoly>(3, QHPoly(1))),
                  LengthMismatch);
  CHECK_THROWS_AS(PolyMatrix::diag_band(4, 5, {}), LengthMismatch);

  // diagonal_component inverts diag_band
  PolyMatrix m = const_diag(6, 4, {120, 1130});
  auto vals = m.diagonal_component(4);
  REQUIRE(vals.size() == 2);
  CHECK(vals[0] == QHPoly(120));
  CHECK(vals[1] == QHPoly(1130));
}

TEST_CASE("matrix arithmetic basics") {
  std::mt19937 rng(5);
  PolyMatrix a(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a.at(i, j) = random_poly(rng);
  CHECK(commutator(a, a).is_zero());
  CHECK(a * PolyMatrix::identity(4) == a);
  CHECK((a - a).is_zero());

  PolyMatrix b(3);
  CHECK_THROWS_AS(a + b, DimMismatch);
  CHECK_THROWS_AS(a * b, DimMismatch);
}

TEST_CASE("band offsets add under products") {
  PolyMatrix d3 = const_diag(6, 3, {1, 1, 1});
  PolyMatrix d2 = const_diag(6, 2, {1, 1, 1, 1});
  PolyMatrix p = d3 * d2;
  CHECK(p.is_n_diagonal(5));
  CHECK_FALSE(p.is_zero());

  std::mt19937 rng(17);
  std::uniform_int_distribution<int> dims(3, 10);
  for (int t = 0; t < 60; ++t) {
    int dim = dims(rng);
    std::uniform_int_distribution<int> offs(-(dim - 1), dim - 1);
    int n = offs(rng), m = offs(rng);
    auto band = [&](int off) {
      std::vector<QHPoly> v;
      for (int i = 0; i < dim - std::abs(off); ++i) v.push_back(random_poly(rng, 2, 2, 0, 2));
      return PolyMatrix::diag_band(dim, off, std::move(v));
    };
    PolyMatrix prod = band(n) * band(m);
    if (std::abs(n + m) > dim - 1)
      CHECK(prod.is_zero());
    else
      CHECK(prod.is_n_diagonal(n + m));
  }
}

TEST_CASE("commutator with the subdiagonal identity, against a dense oracle") {
  // [diag_5(120), I_{-1}] in dimension 6
  PolyMatrix q31 = const_diag(6, 5, {120});
  PolyMatrix sub = PolyMatrix::sub_identity(6);
  PolyMatrix lhs = commutator(q31, sub);
  CHECK(lhs == const_diag(6, 4, {120, -120}));

  PolyMatrix oracle = naive_mul(q31, sub) - naive_mul(sub, q31);
  CHECK(lhs == oracle);

  // consistency with the reference Q_2^1 = R_2 + [Q_3^1, I_{-1}] = diag_4(120, 1130)
  PolyMatrix r2 = const_diag(6, 4, {0, 1250});
  CHECK(r2 + lhs == const_diag(6, 4, {120, 1130}));
}

TEST_CASE("matrix product agrees with the dense oracle on random input") {
  std::mt19937 rng(29);
  for (int t = 0; t < 40; ++t) {
    std::uniform_int_distribution<int> dims(2, 6);
    int dim = dims(rng);
    PolyMatrix a(dim), b(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        a.at(i, j) = random_poly(rng, 2, 2, 0, 2);
        b.at(i, j) = random_poly(rng, 2, 2, 0, 2);
      }
    CHECK(a * b == naive_mul(a, b));
  }
}

TEST_CASE("unipotent inverse") {
  CHECK(PolyMatrix::identity(5).unipotent_inverse() == PolyMatrix::identity(5));

  // I + q*diag_1(...) in dimension 4: inverse is the alternating Neumann sum
  PolyMatrix u = PolyMatrix::identity(4) +
                 const_diag(4, 1, {2, 3, 5}).shifted(BigRat(1), 1, 0);
  PolyMatrix inv = u.unipotent_inverse();
  CHECK(u * inv == PolyMatrix::identity(4));
  CHECK(inv * u == PolyMatrix::identity(4));

  // Q_0 of M_7^5 from the reference data
  PolyMatrix q0 = refdata::matrix_from_rows(refdata::q0_75);
  CHECK(q0 * q0.unipotent_inverse() == PolyMatrix::identity(6));

  std::mt19937 rng(41);
  for (int t = 0; t < 30; ++t) {
    std::uniform_int_distribution<int> dims(1, 6);
    PolyMatrix r = random_unipotent(rng, dims(rng));
    PolyMatrix rinv = r.unipotent_inverse();
    CHECK(r * rinv == PolyMatrix::identity(r.dim()));
    CHECK(rinv * r == PolyMatrix::identity(r.dim()));
  }
}

TEST_CASE("unipotent inverse rejects non-unipotent input") {
  PolyMatrix m = PolyMatrix::identity(3);
  m.at(1, 1) = QHPoly(2);
  CHECK_THROWS_AS(m.unipotent_inverse(), NotUnipotent);

  PolyMatrix l = PolyMatrix::identity(3);
  l.at(2, 0) = QHPoly::q();
  CHECK_THROWS_AS(l.unipotent_inverse(), NotUnipotent);
}

TEST_CASE("transpose and band range") {
  PolyMatrix m = const_diag(5, 2, {1, 2, 3});
  CHECK(m.transpose().is_n_diagonal(-2));
  auto range = m.band_range();
  REQUIRE(range.has_value());
  CHECK(range->first == 2);
  CHECK(range->second == 2);
  CHECK_FALSE(PolyMatrix(4).band_range().has_value());
}
