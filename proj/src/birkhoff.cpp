#include "fanoqc/birkhoff.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

namespace fanoqc {

QSystem::QSystem(FanoParams params, std::vector<std::vector<PolyMatrix>> coeffs)
    : params_(params), q_(std::move(coeffs)) {}

PolyMatrix QSystem::coeff(int i, int alpha) const {
  int dim = params_.dim();
  if (alpha == 0)
    return i == 0 ? PolyMatrix::identity(dim) : PolyMatrix(dim);
  if (i < 0 || i >= static_cast<int>(q_.size()) || alpha < 0) return PolyMatrix(dim);
  const auto& row = q_[static_cast<size_t>(i)];
  if (alpha > static_cast<int>(row.size())) return PolyMatrix(dim);
  return row[static_cast<size_t>(alpha - 1)];
}

PolyMatrix QSystem::q_poly(int i) const {
  int dim = params_.dim();
  PolyMatrix m = (i == 0) ? PolyMatrix::identity(dim) : PolyMatrix(dim);
  if (i < 0 || i >= static_cast<int>(q_.size())) return m;
  const auto& row = q_[static_cast<size_t>(i)];
  for (size_t a = 0; a < row.size(); ++a)
    m += row[a].shifted(BigRat(1), static_cast<int>(a) + 1, 0);
  return m;
}

bool QSystem::entries_integral() const {
  for (const auto& row : q_)
    for (const auto& mat : row)
      for (int i = 0; i < mat.dim(); ++i)
        for (int j = 0; j < mat.dim(); ++j)
          for (const auto& [m, c] : mat.at(i, j).terms())
            if (!c.is_integer()) return false;
  return true;
}

namespace {

// Sum a term list; reversing the accumulation order must not change the
// exact result (uniqueness regression hook).
PolyMatrix sum_terms(const std::vector<PolyMatrix>& terms, int dim, bool permute) {
  PolyMatrix acc(dim);
  if (permute) {
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) acc += *it;
  } else {
    for (const auto& t : terms) acc += t;
  }
  return acc;
}

struct Recursion {
  const AdaptedFamily& f;
  int dim, k, nk;
  bool permute;
  // getter over whatever coefficients are known so far
  std::function<PolyMatrix(int, int)> Q;

  PolyMatrix band(int i) const {
    if (i < -1 || i > k - 2) return PolyMatrix(dim);
    return f.band(i);
  }

  // Q_i^1 = R_i + [Q_{i+1}^1, I_{-1}]
  PolyMatrix gamma_one(int i) const {
    PolyMatrix sub = PolyMatrix::sub_identity(dim);
    std::vector<PolyMatrix> terms{band(i), commutator(Q(i + 1, 1), sub)};
    return sum_terms(terms, dim, permute);
  }

  // The displayed γ=2 identities.
  PolyMatrix gamma_two(int i) const {
    PolyMatrix sub = PolyMatrix::sub_identity(dim);
    std::vector<PolyMatrix> terms;
    if (i == 0) {
      // 2Q_0^2 = Q_0^1(R_0 + [Q_1^1, I_{-1}]) + [Q_1^2, I_{-1}] + Q_1^1 R_{-1}
      terms.push_back(Q(0, 1) * (band(0) + commutator(Q(1, 1), sub)));
      terms.push_back(commutator(Q(1, 2), sub));
      terms.push_back(Q(1, 1) * band(-1));
    } else {
      // 2Q_i^2 = Σ_{j=1}^{i+1} Q_j^1 R_{i-j} + [Q_{i+1}^2, I_{-1}] - [Q_1^1, I_{-1}] Q_i^1
      for (int j = 1; j <= i + 1; ++j) terms.push_back(Q(j, 1) * band(i - j));
      terms.push_back(commutator(Q(i + 1, 2), sub));
      terms.push_back(-(commutator(Q(1, 1), sub) * Q(i, 1)));
    }
    return sum_terms(terms, dim, permute).shifted(BigRat(1, 2), 0, 0);
  }

  // The general γ >= 3 identities (also valid at γ = 2 with the empty sums).
  PolyMatrix gamma_general(int i, int gamma) const {
    PolyMatrix sub = PolyMatrix::sub_identity(dim);
    std::vector<PolyMatrix> terms;
    if (i == 0) {
      // γQ_0^γ = [Q_1^γ, I_{-1}] + Q_1^{γ-1} R_{-1} + Q_0^{γ-1}(R_0 + [Q_1^1, I_{-1}])
      //          + Σ_{α+β=γ-1} Q_0^α ([Q_1^{β+1}, I_{-1}] + Q_1^β R_{-1})
      terms.push_back(commutator(Q(1, gamma), sub));
      terms.push_back(Q(1, gamma - 1) * band(-1));
      terms.push_back(Q(0, gamma - 1) * (band(0) + commutator(Q(1, 1), sub)));
      for (int a = 1; a <= gamma - 2; ++a) {
        int b = gamma - 1 - a;
        terms.push_back(Q(0, a) * (commutator(Q(1, b + 1), sub) + Q(1, b) * band(-1)));
      }
    } else {
      // γQ_i^γ = Σ_{j=1}^{i+1} Q_j^{γ-1} R_{i-j} + [Q_{i+1}^γ, I_{-1}]
      //          - [Q_1^1, I_{-1}] Q_i^{γ-1}
      //          - Σ_{α+β=γ-1} ([Q_1^{α+1}, I_{-1}] + Q_1^α R_{-1}) Q_i^β
      for (int j = 1; j <= i + 1; ++j) terms.push_back(Q(j, gamma - 1) * band(i - j));
      terms.push_back(commutator(Q(i + 1, gamma), sub));
      terms.push_back(-(commutator(Q(1, 1), sub) * Q(i, gamma - 1)));
      for (int a = 1; a <= gamma - 2; ++a) {
        int b = gamma - 1 - a;
        terms.push_back(-((commutator(Q(1, a + 1), sub) + Q(1, a) * band(-1)) * Q(i, b)));
      }
    }
    return sum_terms(terms, dim, permute).shifted(BigRat(1, gamma), 0, 0);
  }
};

void assert_band_constant(const PolyMatrix& m, int offset, int i, int gamma) {
  std::string name = "Q_" + std::to_string(i) + "^" + std::to_string(gamma);
  if (!m.is_n_diagonal(offset))
    throw Error(name + " is not " + std::to_string(offset) + "-diagonal");
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c)
      if (!m.at(r, c).is_constant())
        throw Error(name + " has a non-constant entry " + m.at(r, c).str());
}

}  // namespace

QSystem solve_q_system(const AdaptedFamily& f, const SolveOptions& opts) {
  if (!f.has_bands())
    throw Error("Q system requires the band decomposition carried by build_omega_pf");
  const FanoParams p = f.params;
  const int dim = p.dim(), k = p.k, nk = p.fano_index();

  std::vector<std::vector<PolyMatrix>> store(static_cast<size_t>(std::max(0, k - 1)));
  auto amax = [&](int i) { return (p.N - 2 - i) / nk; };
  for (int i = 0; i <= k - 2; ++i)
    store[static_cast<size_t>(i)].assign(static_cast<size_t>(amax(i)), PolyMatrix(dim));

  auto lookup = [&](int i, int alpha) -> PolyMatrix {
    if (alpha == 0) return i == 0 ? PolyMatrix::identity(dim) : PolyMatrix(dim);
    if (i < 0 || i > k - 2 || alpha < 0 || alpha > amax(i)) return PolyMatrix(dim);
    return store[static_cast<size_t>(i)][static_cast<size_t>(alpha - 1)];
  };
  Recursion rec{f, dim, k, nk, opts.permute_terms, lookup};

  int gamma_total = (k >= 2) ? amax(0) : 0;
  for (int gamma = 1; gamma <= gamma_total; ++gamma)
    for (int i = k - 2; i >= 0; --i) {
      if (gamma > amax(i)) continue;
      PolyMatrix m = (gamma == 1)   ? rec.gamma_one(i)
                     : (gamma == 2) ? rec.gamma_two(i)
                                    : rec.gamma_general(i, gamma);
      assert_band_constant(m, i + gamma * nk, i, gamma);
      store[static_cast<size_t>(i)][static_cast<size_t>(gamma - 1)] = std::move(m);
    }

  return QSystem(p, std::move(store));
}

PolyMatrix coeff_from_general_identity(const QSystem& s, const AdaptedFamily& f, int i,
                                       int gamma) {
  if (gamma < 2) throw Error("general identity applies for gamma >= 2");
  Recursion rec{f, f.params.dim(), f.params.k, f.params.fano_index(), false,
                [&s](int j, int a) { return s.coeff(j, a); }};
  return rec.gamma_general(i, gamma);
}

PolyMatrix assemble_lplus(const QSystem& s) {
  const FanoParams& p = s.params();
  PolyMatrix inner = PolyMatrix::identity(p.dim());
  for (int i = 1; i <= p.k - 2; ++i) inner += s.q_poly(i).shifted(BigRat(1), 0, i);
  return s.q_poly(0) * inner;
}

NormalizedConnection normalized_connection(const QSystem& s, const AdaptedFamily& f) {
  if (!f.has_bands()) throw Error("normalized connection requires the band decomposition");
  int dim = f.params.dim();
  PolyMatrix q0 = s.q_poly(0);
  PolyMatrix omega = PolyMatrix::sub_identity(dim) + f.band(-1).shifted(BigRat(1), 1, 0);
  PolyMatrix m = q0 * omega * q0.unipotent_inverse();
  if (!m.is_h_free()) throw Error("normalized connection is not 1/h-linear");
  return NormalizedConnection{f.params, std::move(m), false};
}

NormalizedConnection apply_dubrovin_shift(NormalizedConnection c) {
  if (c.params.fano_index() != 1 || c.shifted) return c;
  c.M -= PolyMatrix::identity(c.params.dim()).shifted(factorial(c.params.N - 1), 1, 0);
  c.shifted = true;
  return c;
}

NormalizedConnection dubrovin_connection(const FanoParams& p, const SolveOptions& opts) {
  AdaptedFamily f = build_omega_pf(p);
  QSystem s = solve_q_system(f, opts);
  return apply_dubrovin_shift(normalized_connection(s, f));
}

bool verify_gauge(const PolyMatrix& lplus, const AdaptedFamily& f,
                  const NormalizedConnection& c) {
  if (lplus.dim() != f.R.dim() || lplus.dim() != c.M.dim()) return false;
  PolyMatrix inv(lplus.dim());
  try {
    inv = lplus.unipotent_inverse();
  } catch (const NotUnipotent&) {
    return false;
  }
  PolyMatrix rhs = lplus * f.R * inv + (lplus * inv.euler_derivative()).shifted(BigRat(1), 0, 1);
  return rhs == c.M;
}

AdaptedFamily as_adapted_family(const NormalizedConnection& c) {
  return AdaptedFamily{c.params, c.M, {}};
}

}  // namespace fanoqc
