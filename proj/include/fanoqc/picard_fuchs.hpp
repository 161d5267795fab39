#pragma once

#include <vector>

#include "fanoqc/diff_operator.hpp"
#include "fanoqc/poly_matrix.hpp"

namespace fanoqc {

/// Hypersurface of degree k in CP^{N-1}; Fano means N > k. N >= 5 is the
/// default guard (relax with allow_small for N = 3, 4).
struct FanoParams {
  int N = 0;
  int k = 0;

  static FanoParams make(int N, int k, bool allow_small = false);

  int dim() const { return N - 1; }
  /// First Chern class multiplier N - k.
  int fano_index() const { return N - k; }
};

/// Coefficients [λ_0, ..., λ_{k-1}] of k·(kX+1)(kX+2)···(kX+(k-1));
/// λ_0 = k! and λ_{k-1} = k^k.
std::vector<BigRat> lambda_coeffs(int k);

/// (h∂)^{N-1} - q(λ_{k-1}(h∂)^{k-1} + λ_{k-2} h (h∂)^{k-2} + ... + λ_0 h^{k-1}).
DiffOperator picard_fuchs_operator(const FanoParams& p);

/// A connection family Ω = (1/h) R(q,h) dt subject to the adapted
/// conditions (P), (H), (I), (N). When built from the Picard-Fuchs
/// operator, the constant band matrices R_{-1}, ..., R_{k-2} of the
/// decomposition (1/h)ω + θ_0 + hθ_1 + ... are kept alongside.
struct AdaptedFamily {
  FanoParams params;
  PolyMatrix R;
  std::vector<PolyMatrix> bands;  // bands[i] = R_{i-1}, i = 0..k-1; empty unless built here

  bool has_bands() const { return !bands.empty(); }
  /// R_i for i in -1..k-2.
  const PolyMatrix& band(int i) const { return bands[static_cast<size_t>(i + 1)]; }
};

/// The family Ω_PF of the D-module basis [1], [h∂], ..., [(h∂)^{N-2}]:
/// R = I_{-1} + q · sum_{i=-1}^{k-2} h^{i+1} R_i with
/// R_i = diag_{N-k+i}(0,...,0,λ_{k-2-i}).
AdaptedFamily build_omega_pf(const FanoParams& p);

}  // namespace fanoqc
