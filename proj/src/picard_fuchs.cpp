#include "fanoqc/picard_fuchs.hpp"

#include <string>

namespace fanoqc {

FanoParams FanoParams::make(int N, int k, bool allow_small) {
  if (k < 1)
    throw InvalidParams("degree k must be >= 1, got " + std::to_string(k));
  if (N <= k)
    throw InvalidParams("Fano condition N > k violated: N=" + std::to_string(N) +
                        ", k=" + std::to_string(k));
  int min_n = allow_small ? 3 : 5;
  if (N < min_n)
    throw InvalidParams("N=" + std::to_string(N) +
                        (allow_small ? " is below the supported minimum 3"
                                     : " is below the default guard 5 (use allow-small)"));
  return FanoParams{N, k};
}

std::vector<BigRat> lambda_coeffs(int k) {
  if (k < 1) throw InvalidParams("lambda coefficients need k >= 1");
  // Expand k * prod_{j=1}^{k-1} (kX + j), low degree first.
  std::vector<BigRat> c{BigRat(k)};
  for (int j = 1; j <= k - 1; ++j) {
    std::vector<BigRat> next(c.size() + 1, BigRat(0));
    for (size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i] * BigRat(j);
      next[i + 1] += c[i] * BigRat(k);
    }
    c = std::move(next);
  }
  return c;
}

DiffOperator picard_fuchs_operator(const FanoParams& p) {
  auto lambda = lambda_coeffs(p.k);
  std::vector<QHPoly> coeffs(static_cast<size_t>(p.N));
  coeffs[static_cast<size_t>(p.N - 1)] = QHPoly(1);
  for (int g = 0; g < p.k; ++g)
    coeffs[static_cast<size_t>(g)] = QHPoly::monomial(-lambda[static_cast<size_t>(g)], 1, p.k - 1 - g);
  return DiffOperator::from_coeffs(std::move(coeffs));
}

AdaptedFamily build_omega_pf(const FanoParams& p) {
  int dim = p.dim();
  auto lambda = lambda_coeffs(p.k);

  AdaptedFamily f{p, PolyMatrix::sub_identity(dim), {}};
  f.bands.reserve(static_cast<size_t>(p.k));
  for (int i = -1; i <= p.k - 2; ++i) {
    int offset = p.fano_index() + i;
    std::vector<QHPoly> values(static_cast<size_t>(dim - offset), QHPoly());
    values.back() = QHPoly(lambda[static_cast<size_t>(p.k - 2 - i)]);
    f.bands.push_back(PolyMatrix::diag_band(dim, offset, std::move(values)));
    f.R += f.bands.back().shifted(BigRat(1), 1, i + 1);  // q h^{i+1} R_i
  }
  return f;
}

}  // namespace fanoqc
