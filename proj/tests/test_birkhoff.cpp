#include "doctest.h"
#include "fanoqc/birkhoff.hpp"
#include "fanoqc/render.hpp"
#include "reference_data.hpp"

using namespace fanoqc;

namespace {

void check_q_system(const QSystem& sys, const std::vector<refdata::QCoeff>& expected) {
  for (const auto& e : expected) {
    PolyMatrix got = sys.coeff(e.i, e.alpha);
    INFO("Q_", e.i, "^", e.alpha);
    CHECK(got.is_n_diagonal(e.band));
    auto vals = got.diagonal_component(e.band);
    REQUIRE(vals.size() == e.values.size());
    for (size_t v = 0; v < vals.size(); ++v) CHECK(vals[v] == QHPoly(BigRat(e.values[v])));
  }
}

}  // namespace

TEST_CASE("M_7^5 Q system, L_+ and normalized connection match the reference data") {
  FanoParams p = FanoParams::make(7, 5);
  AdaptedFamily pf = build_omega_pf(p);
  QSystem sys = solve_q_system(pf);

  check_q_system(sys, refdata::q_coeffs_75);
  CHECK(sys.coeff(2, 2).is_zero());  // 2 + 2*2 > 5
  CHECK(sys.coeff(3, 2).is_zero());
  CHECK(sys.entries_integral());

  CHECK(sys.q_poly(0) == refdata::matrix_from_rows(refdata::q0_75));
  CHECK(assemble_lplus(sys) == refdata::matrix_from_rows(refdata::lplus_75));

  NormalizedConnection hat = normalized_connection(sys, pf);
  CHECK(hat.M == refdata::matrix_from_rows(refdata::omega_hat_75));
  CHECK(hat.M.is_h_free());
  CHECK_FALSE(hat.shifted);

  CHECK(verify_gauge(assemble_lplus(sys), pf, hat));

  // N-k >= 2: the Dubrovin form is the normalized connection itself
  NormalizedConnection dub = apply_dubrovin_shift(hat);
  CHECK(dub.M == hat.M);
  CHECK_FALSE(dub.shifted);
}

TEST_CASE("M_5^4 Q system through Q_0^3 and the shifted Dubrovin matrix") {
  FanoParams p = FanoParams::make(5, 4);
  AdaptedFamily pf = build_omega_pf(p);
  QSystem sys = solve_q_system(pf);

  check_q_system(sys, refdata::q_coeffs_54);
  CHECK(sys.entries_integral());
  CHECK(sys.q_poly(0) == refdata::matrix_from_rows(refdata::q0_54));
  CHECK(assemble_lplus(sys) == refdata::matrix_from_rows(refdata::lplus_54));

  NormalizedConnection hat = normalized_connection(sys, pf);
  CHECK(hat.M == refdata::matrix_from_rows(refdata::omega_hat_54));
  CHECK(verify_gauge(assemble_lplus(sys), pf, hat));

  NormalizedConnection dub = apply_dubrovin_shift(hat);
  CHECK(dub.shifted);
  CHECK(dub.M == refdata::matrix_from_rows(refdata::dubrovin_54));
  CHECK(dub.M.at(1, 1) == QHPoly::monomial(BigRat(80), 1, 0));
  // shifting twice is a no-op
  CHECK(apply_dubrovin_shift(dub).M == dub.M);
}

TEST_CASE("hyperplane k=1: nothing to normalize") {
  FanoParams p = FanoParams::make(9, 1);
  AdaptedFamily pf = build_omega_pf(p);
  QSystem sys = solve_q_system(pf);
  CHECK(sys.q_poly(0) == PolyMatrix::identity(8));
  CHECK(assemble_lplus(sys) == PolyMatrix::identity(8));
  NormalizedConnection hat = normalized_connection(sys, pf);
  CHECK(hat.M == pf.R);  // (1/h)ω itself
  CHECK(verify_gauge(PolyMatrix::identity(8), pf, hat));
  CHECK(reduced_operator(as_adapted_family(hat)) == picard_fuchs_operator(p));
}

TEST_CASE("gauge verification fails for the wrong factor") {
  FanoParams p = FanoParams::make(7, 5);
  AdaptedFamily pf = build_omega_pf(p);
  QSystem sys = solve_q_system(pf);
  NormalizedConnection hat = normalized_connection(sys, pf);
  CHECK_FALSE(verify_gauge(PolyMatrix::identity(6), pf, hat));  // positive h powers survive

  PolyMatrix not_unipotent(6);
  CHECK_FALSE(verify_gauge(not_unipotent, pf, hat));
}

TEST_CASE("the γ=2 step agrees with the general identity") {
  for (auto [n, k] : {std::pair{7, 5}, {5, 4}, {8, 5}}) {
    FanoParams p = FanoParams::make(n, k);
    AdaptedFamily pf = build_omega_pf(p);
    QSystem sys = solve_q_system(pf);
    for (int i = 0; i <= k - 2; ++i) {
      if (2 > sys.alpha_max(i)) continue;
      CHECK(coeff_from_general_identity(sys, pf, i, 2) == sys.coeff(i, 2));
    }
  }
}

TEST_CASE("solving is deterministic under commutator-term permutation") {
  for (auto [n, k] : {std::pair{7, 5}, {5, 4}, {6, 2}, {9, 7}}) {
    FanoParams p = FanoParams::make(n, k);
    std::string plain = render::matrix_text(dubrovin_connection(p).M);
    std::string again = render::matrix_text(dubrovin_connection(p).M);
    std::string permuted = render::matrix_text(dubrovin_connection(p, SolveOptions{true}).M);
    CHECK(plain == again);
    CHECK(plain == permuted);
  }
}

TEST_CASE("normalized connection is 1/h-linear and adapted across the sweep") {
  for (int n = 5; n <= 12; ++n)
    for (int k = 1; k < n; ++k) {
      FanoParams p = FanoParams::make(n, k);
      AdaptedFamily pf = build_omega_pf(p);
      QSystem sys = solve_q_system(pf);
      NormalizedConnection hat = normalized_connection(sys, pf);
      CHECK(hat.M.is_h_free());
      CHECK(adapted_check(as_adapted_family(hat)).pass());
    }
}

TEST_CASE("L_+ entries are homogeneous of degree 2(β-α)") {
  for (auto [n, k] : {std::pair{7, 5}, {5, 4}, {6, 3}}) {
    FanoParams p = FanoParams::make(n, k);
    PolyMatrix lplus = assemble_lplus(solve_q_system(build_omega_pf(p)));
    for (int i = 0; i < p.dim(); ++i)
      for (int j = 0; j < p.dim(); ++j) {
        CHECK(lplus.at(i, j).is_h_polynomial());
        CHECK(homogeneous_of_degree(lplus.at(i, j), n, k, 2 * (j - i)));
      }
  }
}
