#include "fanoqc/gw.hpp"

#include <string>

namespace fanoqc {

namespace {

std::string entry_label(int r, int c) {
  return "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
}

void require_dubrovin_form(const NormalizedConnection& c) {
  if (c.params.fano_index() == 1 && !c.shifted)
    throw MalformedConnection(
        "N-k=1 requires the shifted Dubrovin form; apply the (N-1)!q shift first");
}

}  // namespace

BigRat GWTable::value(int m, int d) const {
  auto it = L.find({d, m});
  return it == L.end() ? BigRat(0) : it->second;
}

bool GWTable::gw_integral() const {
  for (const auto& [key, v] : L)
    if (!(BigRat(params.k) * v).is_integer()) return false;
  return true;
}

GWTable structural_constants(const NormalizedConnection& c) {
  require_dubrovin_form(c);
  const PolyMatrix& M = c.M;
  const int N = c.params.N, nk = c.params.fano_index();
  const int dim = c.params.dim();
  GWTable table{c.params, {}};

  for (int beta = 0; beta < dim; ++beta) {
    int m = N - 2 - beta;
    for (int rho = 0; rho < dim; ++rho) {
      const QHPoly& e = M.at(rho, beta);
      if (rho == beta + 1) {
        if (!e.is_one())
          throw MalformedConnection("subdiagonal entry " + entry_label(rho, beta) + " is " +
                                    e.str() + ", expected 1");
        continue;
      }
      int gap = beta + 1 - rho;
      bool slot = gap >= 1 && gap % nk == 0;
      int d = slot ? gap / nk : 0;
      if (!slot) {
        if (!e.is_zero())
          throw MalformedConnection("entry " + entry_label(rho, beta) +
                                    " must vanish by the degree bookkeeping, got " + e.str());
        continue;
      }
      // slot for L_m^d: the entry must be c*q^d (possibly zero)
      for (const auto& [mono, coef] : e.terms())
        if (mono.h != 0 || mono.q != d)
          throw MalformedConnection("entry " + entry_label(rho, beta) + " must be a multiple of q^" +
                                    std::to_string(d) + ", got " + e.str());
      table.L[{d, m}] = e.coeff(d, 0);
    }
  }
  return table;
}

std::vector<GWRecord> gw_invariants(const GWTable& t) {
  std::vector<GWRecord> records;
  records.reserve(t.L.size());
  const int N = t.params.N, k = t.params.k, nk = t.params.fano_index();
  for (const auto& [key, v] : t.L) {
    auto [d, m] = key;
    records.push_back({d, {1, N - 2 - m, m - 1 + d * nk}, BigRat(k) * v});
  }
  return records;
}

bool pairing_symmetry_check(const NormalizedConnection& c) {
  const int dim = c.params.dim();
  PolyMatrix j(dim);
  for (int i = 0; i < dim; ++i) j.at(i, dim - 1 - i) = QHPoly(BigRat(c.params.k));
  return j * c.M == c.M.transpose() * j;
}

bool quantum_relation_check(const NormalizedConnection& c) {
  const int dim = c.params.dim();
  const int N = c.params.N, k = c.params.k;
  PolyMatrix bt = c.M;
  if (c.params.fano_index() == 1 && c.shifted)
    bt += PolyMatrix::identity(dim).shifted(factorial(k), 1, 0);

  PolyMatrix power = PolyMatrix::identity(dim);
  for (int i = 0; i < k - 1; ++i) power = power * bt;
  PolyMatrix rhs = power.shifted(pow(BigRat(k), k), 1, 0);  // k^k q b̃^{k-1}
  for (int i = k - 1; i < N - 1; ++i) power = power * bt;
  return power == rhs;
}

QuantumMultTable quantum_mult_table(const NormalizedConnection& c) {
  require_dubrovin_form(c);
  const int dim = c.params.dim();

  // Columns of V are the quantum powers b^{∘i} = M^i e_0 in the cup basis.
  std::vector<PolyMatrix> mpow{PolyMatrix::identity(dim)};
  for (int i = 1; i < dim; ++i) mpow.push_back(mpow.back() * c.M);
  PolyMatrix v(dim);
  for (int i = 0; i < dim; ++i)
    for (int r = 0; r < dim; ++r) v.at(r, i) = mpow[static_cast<size_t>(i)].at(r, 0);
  PolyMatrix w = v.unipotent_inverse();

  QuantumMultTable table;
  for (int i = 0; i < dim; ++i) {
    // p_i(M) = Σ_l w_{l,i} M^l represents quantum multiplication by b_i.
    PolyMatrix op(dim);
    for (int l = 0; l < dim; ++l) {
      const QHPoly& wl = w.at(l, i);
      if (!wl.is_zero()) op += mpow[static_cast<size_t>(l)].scaled(wl);
    }
    for (int j = 0; j < dim; ++j) {
      std::vector<QuantumProductTerm> terms;
      for (int l = 0; l < dim; ++l)
        for (const auto& [mono, coef] : op.at(l, j).terms())
          terms.push_back({coef, mono.q, l});
      table[{i, j}] = std::move(terms);
    }
  }
  return table;
}

}  // namespace fanoqc
