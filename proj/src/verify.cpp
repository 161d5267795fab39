#include "fanoqc/verify.hpp"

#include "fanoqc/render.hpp"

namespace fanoqc {

namespace {

bool entry_degree_rule(const PolyMatrix& m, int nk) {
  // Every nonzero entry is a monomial c*q^d with d(N-k) = col - row + 1.
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) {
      const QHPoly& e = m.at(i, j);
      if (e.is_zero()) continue;
      if (!e.is_monomial()) return false;
      const auto& [mono, c] = *e.terms().begin();
      if (mono.h != 0 || mono.q * nk != j - i + 1) return false;
    }
  return true;
}

}  // namespace

VerificationReport verify_pipeline(const FanoParams& p) {
  VerificationReport report{p, {}, {}};
  auto add = [&report](std::string name, bool ok, std::string detail = "") {
    report.checks.push_back({std::move(name), ok, ok ? "" : std::move(detail)});
  };

  AdaptedFamily pf = build_omega_pf(p);
  DiffOperator pf_op = picard_fuchs_operator(p);

  AdaptedReport pf_rep = adapted_check(pf);
  add("adapted conditions on Omega_PF", pf_rep.pass(), pf_rep.summary());

  QSystem sys = solve_q_system(pf);  // throws if a Q_i^alpha breaks its band
  add("Q_i^alpha band structure", true);
  report.notes.push_back(std::string("Q entries integral: ") +
                         (sys.entries_integral() ? "yes" : "no"));

  PolyMatrix lplus = assemble_lplus(sys);
  NormalizedConnection hat = normalized_connection(sys, pf);
  add("Omega-hat is 1/h-linear", hat.M.is_h_free());

  AdaptedReport hat_rep = adapted_check(as_adapted_family(hat));
  add("adapted conditions on Omega-hat", hat_rep.pass(), hat_rep.summary());

  bool reduced_pf_ok = reduced_operator(pf) == pf_op;
  add("reduced operator of Omega_PF equals Picard-Fuchs operator", reduced_pf_ok);
  bool reduced_hat_ok = reduced_operator(as_adapted_family(hat)) == pf_op;
  add("reduced operator of Omega-hat equals Picard-Fuchs operator", reduced_hat_ok);

  add("gauge factorization identity for L_+", verify_gauge(lplus, pf, hat));

  NormalizedConnection dub = apply_dubrovin_shift(hat);
  add("pairing symmetry J*M = M^T*J", pairing_symmetry_check(dub));
  add("quantum relation b^(N-1) = k^k q b^(k-1)", quantum_relation_check(dub));
  add("Dubrovin entries obey the monomial degree rule",
      entry_degree_rule(dub.M, p.fano_index()));

  bool extraction_ok = true;
  std::string extraction_err;
  try {
    GWTable t = structural_constants(dub);
    report.notes.push_back(std::string("GW values k*L integral: ") +
                           (t.gw_integral() ? "yes" : "no"));
  } catch (const MalformedConnection& e) {
    extraction_ok = false;
    extraction_err = e.what();
  }
  add("structure constants extraction and vanishing range", extraction_ok, extraction_err);

  NormalizedConnection again = dubrovin_connection(p);
  NormalizedConnection permuted = dubrovin_connection(p, SolveOptions{true});
  bool deterministic = render::matrix_text(again.M) == render::matrix_text(dub.M) &&
                       render::matrix_text(permuted.M) == render::matrix_text(dub.M);
  add("deterministic under commutator-term permutation", deterministic);

  return report;
}

}  // namespace fanoqc
