#pragma once

#include <vector>

#include "fanoqc/picard_fuchs.hpp"
#include "fanoqc/reduction.hpp"

namespace fanoqc {

/// Coefficients of L_+ = Q_0(I + hQ_1 + ... + h^{k-2}Q_{k-2}) with
/// Q_i = Σ_{α>=1} q^α Q_i^α (plus the α=0 identity for Q_0). Each Q_i^α is
/// a constant (i+α(N-k))-diagonal matrix and vanishes for
/// α > (N-2-i)/(N-k).
class QSystem {
 public:
  QSystem(FanoParams params, std::vector<std::vector<PolyMatrix>> coeffs);

  const FanoParams& params() const { return params_; }
  /// Largest α with Q_i^α possibly nonzero.
  int alpha_max(int i) const { return (params_.N - 2 - i) / params_.fano_index(); }
  /// Q_i^α as a constant matrix; zero outside the stored range, and the
  /// identity for (i,α) = (0,0).
  PolyMatrix coeff(int i, int alpha) const;
  /// Q_i assembled as a polynomial matrix in q.
  PolyMatrix q_poly(int i) const;
  /// All stored entries integral?
  bool entries_integral() const;

 private:
  FanoParams params_;
  std::vector<std::vector<PolyMatrix>> q_;  // q_[i][a] = Q_i^{a+1}
};

struct SolveOptions {
  /// Accumulate the terms of each coefficient identity in reversed order;
  /// the exact result must be identical (uniqueness regression).
  bool permute_terms = false;
};

/// Solve the (L_i) equations for the Q_i^α by the explicit coefficient
/// recursion, iterating γ = 1, 2, ... and i = k-2 down to 0. Requires the
/// family to carry its band decomposition (built by build_omega_pf).
QSystem solve_q_system(const AdaptedFamily& f, const SolveOptions& opts = {});

/// Recompute Q_i^γ (γ >= 2) from the solved system via the general-γ
/// identity. The solver uses the displayed special case at γ = 2; this is
/// the cross-check that both identities agree.
PolyMatrix coeff_from_general_identity(const QSystem& s, const AdaptedFamily& f, int i,
                                       int gamma);

PolyMatrix assemble_lplus(const QSystem& s);

/// Ω̂ = (1/h) M dt. The shifted flag marks the N-k = 1 Dubrovin correction
/// M - (N-1)!·q·I.
struct NormalizedConnection {
  FanoParams params;
  PolyMatrix M;
  bool shifted = false;
};

/// Ω̂ = (1/h) Q_0 (I_{-1} + q R_{-1}) Q_0^{-1} dt; M is exactly 1/h-linear
/// (h-free) by construction.
NormalizedConnection normalized_connection(const QSystem& s, const AdaptedFamily& f);

/// Apply the N-k = 1 shift -((N-1)!q/h)I dt to reach the Dubrovin form;
/// identity for N-k >= 2.
NormalizedConnection apply_dubrovin_shift(NormalizedConnection c);

/// Full pipeline Ω_PF → Q system → Ω̂ → Dubrovin form.
NormalizedConnection dubrovin_connection(const FanoParams& p, const SolveOptions& opts = {});

/// Exact identity M = L_+ R_PF L_+^{-1} + h L_+ (q ∂/∂q L_+^{-1}), i.e.
/// the factorization (L_-)^{-1}dL_- = L_+ Ω_PF L_+^{-1} + L_+ d(L_+^{-1})
/// is consistent with Ω̂ = (1/h)M dt.
bool verify_gauge(const PolyMatrix& lplus, const AdaptedFamily& f, const NormalizedConnection& c);

/// View the connection's coefficient matrix as an adapted family (no band
/// decomposition attached).
AdaptedFamily as_adapted_family(const NormalizedConnection& c);

}  // namespace fanoqc
