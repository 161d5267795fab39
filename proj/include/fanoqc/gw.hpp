#pragma once

#include <array>
#include <map>
#include <vector>

#include "fanoqc/birkhoff.hpp"

namespace fanoqc {

/// Structure constants L_m^d of b ∘ b_{N-2-m} together with the derived
/// 3-point invariants GW_dA(b, b_{N-2-m}, b_{m-1+d(N-k)}) = k·L_m^d.
/// Entries cover exactly the non-vanishing range 0 <= m <= (N-1)-(N-k)d.
struct GWTable {
  FanoParams params;
  std::map<std::pair<int, int>, BigRat> L;  // key (d, m)

  /// L_m^d; zero outside the stored range.
  BigRat value(int m, int d) const;
  /// Largest degree d with a non-empty m-range.
  int d_max() const { return (params.N - 1) / params.fano_index(); }
  /// All k·L_m^d integral?
  bool gw_integral() const;
};

struct GWRecord {
  int d = 0;
  std::array<int, 3> classes{};  // cup-power indices of (b, b_i, b_j)
  BigRat value;
};

/// Read the structure constants off the Dubrovin coefficient matrix.
/// Requires the Dubrovin form (shifted when N-k = 1); throws
/// MalformedConnection when the matrix violates the slot bookkeeping
/// (subdiagonal != 1, non-monomial entry, or a nonzero entry at an
/// excluded slot).
GWTable structural_constants(const NormalizedConnection& c);

/// The invariants GW_dA(b, b_{N-2-m}, b_{m-1+d(N-k)}) = k·L_m^d, ordered
/// by (d, m).
std::vector<GWRecord> gw_invariants(const GWTable& t);

/// Self-adjointness of quantum multiplication: J·M = M^T·J with
/// J_{α,β} = k·δ_{α+β,N-2}.
bool pairing_symmetry_check(const NormalizedConnection& c);

/// Quantum relation b̃^{N-1} = k^k q b̃^{k-1} as exact matrix polynomials,
/// with b̃ = b + k!q when N-k = 1.
bool quantum_relation_check(const NormalizedConnection& c);

struct QuantumProductTerm {
  BigRat coeff;
  int q_power = 0;
  int basis_index = 0;
  bool operator==(const QuantumProductTerm&) const = default;
};

/// b_i ∘ b_j for all pairs on the Kähler subring: cup-powers are expressed
/// in quantum powers of b by inverting the unitriangular relation
/// b^{∘i} = M^i e_0, then b_i ∘ b_j = p_i(M) e_j.
using QuantumMultTable = std::map<std::pair<int, int>, std::vector<QuantumProductTerm>>;
QuantumMultTable quantum_mult_table(const NormalizedConnection& c);

}  // namespace fanoqc
