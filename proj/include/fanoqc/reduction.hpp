#pragma once

#include <string>
#include <vector>

#include "fanoqc/picard_fuchs.hpp"

namespace fanoqc {

/// Outcome of checking the four adapted conditions on a family
/// Ω = (1/h) R dt.
struct AdaptedReport {
  struct Violation {
    char condition;  // 'P', 'H', 'I' or 'N'
    int row = 0, col = 0;  // 1-based, as printed
    std::string detail;
  };

  bool polynomial = true;    // (P) R polynomial in q and h
  bool homogeneous = true;   // (H) (1/h)R homogeneous
  bool initial = true;       // (I) R(0) = I_{-1}
  bool normalized = true;    // (N) (-1)-diagonal of R is I_{-1}
  std::vector<Violation> violations;

  bool pass() const { return polynomial && homogeneous && initial && normalized; }
  std::string summary() const;
};

AdaptedReport adapted_check(const AdaptedFamily& f);

/// Check (P), (H), (I) for a gauge transformation U: polynomial entries,
/// n-diagonal component of degree 2n, U(0) = I. Adapted gauges are
/// automatically unit upper triangular.
bool is_adapted_gauge(const PolyMatrix& u, const FanoParams& p);

/// The elimination recursion P_0 = 1, P_{β+1} = (h∂)P_β - Σ_{α<=β} r_{α,β} P_α;
/// returns the monic order-(N-1) operator P_{N-1}. Throws NotAdapted when the
/// family fails the adapted conditions.
DiffOperator reduced_operator(const AdaptedFamily& f);

/// Adapted gauge action U*Ω = U^{-1}dU + U^{-1}ΩU with d = dt·q∂/∂q, i.e.
/// R' = h U^{-1}(q ∂U/∂q) + U^{-1} R U.
AdaptedFamily gauge_transform(const PolyMatrix& u, const AdaptedFamily& f);

}  // namespace fanoqc
