#include <nlohmann/json.hpp>

#include "doctest.h"
#include "fanoqc/gw.hpp"
#include "fanoqc/render.hpp"
#include "reference_data.hpp"

using namespace fanoqc;

namespace {

NormalizedConnection connection_75() {
  return dubrovin_connection(FanoParams::make(7, 5));
}

}  // namespace

TEST_CASE("M_5^3 structure constants from the full pipeline") {
  GWTable t = structural_constants(dubrovin_connection(FanoParams::make(5, 3)));
  REQUIRE(t.L.size() == 4);
  for (const auto& e : refdata::l_values_53) CHECK(t.value(e.m, e.d) == BigRat(e.value));
  CHECK(t.gw_integral());
  // out of range
  CHECK(t.value(3, 1) == BigRat(0));
  CHECK(t.value(1, 2) == BigRat(0));
  CHECK(t.L.find({2, 1}) == t.L.end());
  CHECK(t.d_max() == 2);
}

TEST_CASE("M_7^5 structure constants match the reference matrix") {
  GWTable t = structural_constants(connection_75());
  CHECK(t.value(4, 1) == BigRat(120));  // entry (1,2) = 120q
  CHECK(t.value(0, 1) == BigRat(120));
  CHECK(t.value(1, 1) == BigRat(770));
  CHECK(t.value(2, 1) == BigRat(1345));
  CHECK(t.value(3, 1) == BigRat(770));
  CHECK(t.value(0, 2) == BigRat(211200));
  CHECK(t.value(1, 2) == BigRat(692500));
  CHECK(t.value(2, 2) == BigRat(211200));
  CHECK(t.value(0, 3) == BigRat(31320000));
  CHECK(t.L.size() == 9);
}

TEST_CASE("vanishing range holds for every extracted table") {
  for (int n = 5; n <= 10; ++n)
    for (int k = 1; k < n; ++k) {
      FanoParams p = FanoParams::make(n, k);
      GWTable t = structural_constants(dubrovin_connection(p));
      for (const auto& [key, v] : t.L) {
        auto [d, m] = key;
        CHECK(d >= 1);
        CHECK(m >= 0);
        CHECK(m <= (n - 1) - (n - k) * d);
      }
    }
}

TEST_CASE("derived GW invariants") {
  GWTable t = structural_constants(dubrovin_connection(FanoParams::make(5, 3)));
  auto records = gw_invariants(t);
  REQUIRE(records.size() == 4);
  // (d, m) ascending: (1,0), (1,1), (1,2), (2,0)
  CHECK(records[0].d == 1);
  CHECK(records[0].classes == std::array<int, 3>{1, 3, 1});
  CHECK(records[0].value == BigRat(18));
  CHECK(records[1].classes == std::array<int, 3>{1, 2, 2});
  CHECK(records[1].value == BigRat(45));
  CHECK(records[2].classes == std::array<int, 3>{1, 1, 3});
  CHECK(records[2].value == BigRat(18));
  CHECK(records[3].d == 2);
  CHECK(records[3].classes == std::array<int, 3>{1, 3, 3});
  CHECK(records[3].value == BigRat(108));

  // degree balance: 1 + i + j = (N-2) + d(N-k) for every record
  for (int n = 5; n <= 9; ++n)
    for (int k = 1; k < n; ++k) {
      FanoParams p = FanoParams::make(n, k);
      for (const auto& r : gw_invariants(structural_constants(dubrovin_connection(p))))
        CHECK(r.classes[0] + r.classes[1] + r.classes[2] == (n - 2) + r.d * (n - k));
    }
}

TEST_CASE("pairing symmetry") {
  CHECK(pairing_symmetry_check(connection_75()));
  CHECK(pairing_symmetry_check(dubrovin_connection(FanoParams::make(5, 4))));

  NormalizedConnection broken = connection_75();
  broken.M.at(0, 3) += QHPoly::q(2);
  CHECK_FALSE(pairing_symmetry_check(broken));
}

TEST_CASE("quantum relation") {
  // M^6 = 5^5 q M^4 for the reference M_7^5 matrix (oracle: direct powers)
  PolyMatrix m = refdata::matrix_from_rows(refdata::omega_hat_75);
  PolyMatrix m4 = PolyMatrix::identity(6);
  for (int i = 0; i < 4; ++i) m4 = m4 * m;
  PolyMatrix m6 = m4 * m * m;
  CHECK(m6 == m4.shifted(pow(BigRat(5), 5), 1, 0));
  CHECK(quantum_relation_check(connection_75()));

  // M_5^4 via b̃ = b + 4! q on the shifted matrix (oracle: direct powers)
  NormalizedConnection dub54 = dubrovin_connection(FanoParams::make(5, 4));
  PolyMatrix bt = refdata::matrix_from_rows(refdata::dubrovin_54) +
                  PolyMatrix::identity(4).shifted(BigRat(24), 1, 0);
  PolyMatrix bt3 = bt * bt * bt;
  CHECK(bt3 * bt == bt3.shifted(pow(BigRat(4), 4), 1, 0));
  CHECK(quantum_relation_check(dub54));

  // hyperplane: M^{N-1} = q I
  FanoParams p81 = FanoParams::make(8, 1);
  NormalizedConnection hyper = dubrovin_connection(p81);
  CHECK(quantum_relation_check(hyper));
  PolyMatrix power = PolyMatrix::identity(7);
  for (int i = 0; i < 7; ++i) power = power * hyper.M;
  CHECK(power == PolyMatrix::identity(7).shifted(BigRat(1), 1, 0));

  NormalizedConnection broken = connection_75();
  broken.M.at(0, 1) += QHPoly::q();
  CHECK_FALSE(quantum_relation_check(broken));
}

TEST_CASE("quantum multiplication table") {
  NormalizedConnection c = connection_75();
  QuantumMultTable table = quantum_mult_table(c);
  int dim = c.params.dim();

  // b_0 is the identity class
  for (int j = 0; j < dim; ++j) {
    const auto& terms = table.at({0, j});
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].coeff == BigRat(1));
    CHECK(terms[0].q_power == 0);
    CHECK(terms[0].basis_index == j);
  }

  // b_1 ∘ b_j reads off column j of M
  for (int j = 0; j < dim; ++j) {
    PolyMatrix col(dim);
    for (const auto& t : table.at({1, j}))
      col.at(t.basis_index, 0) += QHPoly::monomial(t.coeff, t.q_power, 0);
    for (int r = 0; r < dim; ++r) CHECK(col.at(r, 0) == c.M.at(r, j));
  }

  // commutativity: b_i ∘ b_j = b_j ∘ b_i; in particular b_2 ∘ b_5 computed
  // as p_2(M)e_5 agrees with p_5(M)e_2
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) CHECK(table.at({i, j}) == table.at({j, i}));
  CHECK_FALSE(table.at({2, 5}).empty());
}

TEST_CASE("malformed connections are rejected") {
  NormalizedConnection c = connection_75();

  NormalizedConnection bad_sub = c;
  bad_sub.M.at(1, 0) = QHPoly(2);
  CHECK_THROWS_AS(structural_constants(bad_sub), MalformedConnection);

  NormalizedConnection bad_slot = c;
  bad_slot.M.at(0, 0) = QHPoly::q();  // gap 1, N-k = 2: excluded slot
  CHECK_THROWS_AS(structural_constants(bad_slot), MalformedConnection);

  NormalizedConnection below = c;
  below.M.at(3, 1) = QHPoly::q();  // below the subdiagonal
  CHECK_THROWS_AS(structural_constants(below), MalformedConnection);

  NormalizedConnection bad_power = c;
  bad_power.M.at(0, 1) = QHPoly::q(2);  // slot wants q^1
  CHECK_THROWS_AS(structural_constants(bad_power), MalformedConnection);

  NormalizedConnection bad_h = c;
  bad_h.M.at(0, 1) = QHPoly::monomial(BigRat(120), 1, 1);
  CHECK_THROWS_AS(structural_constants(bad_h), MalformedConnection);

  // unshifted N-k=1 connection: the precondition is enforced
  FanoParams p54 = FanoParams::make(5, 4);
  AdaptedFamily pf = build_omega_pf(p54);
  QSystem sys = solve_q_system(pf);
  NormalizedConnection unshifted = normalized_connection(sys, pf);
  CHECK_THROWS_AS(structural_constants(unshifted), MalformedConnection);
}

TEST_CASE("gw table JSON round-trips through the schema") {
  for (auto [n, k] : {std::pair{5, 3}, {7, 5}, {5, 4}, {6, 1}}) {
    GWTable t = structural_constants(dubrovin_connection(FanoParams::make(n, k)));
    nlohmann::ordered_json j = render::gw_table_json(t);
    GWTable back = render::gw_table_from_json(j);
    CHECK(back.params.N == t.params.N);
    CHECK(back.params.k == t.params.k);
    CHECK(back.L == t.L);
    // documented shape
    CHECK(j.at("N").get<int>() == n);
    CHECK(j.contains("L"));
    CHECK(j.contains("gw"));
    for (const auto& e : j.at("gw")) CHECK(e.at("value").is_string());
  }
}

TEST_CASE("gw JSON content for M_5^3") {
  GWTable t = structural_constants(dubrovin_connection(FanoParams::make(5, 3)));
  nlohmann::ordered_json j = render::gw_table_json(t);
  REQUIRE(j.at("L").size() == 4);
  CHECK(j.at("L")[0] == nlohmann::ordered_json{{"m", 0}, {"d", 1}, {"value", "6"}});
  CHECK(j.at("L")[1] == nlohmann::ordered_json{{"m", 1}, {"d", 1}, {"value", "15"}});
  CHECK(j.at("L")[2] == nlohmann::ordered_json{{"m", 2}, {"d", 1}, {"value", "6"}});
  CHECK(j.at("L")[3] == nlohmann::ordered_json{{"m", 0}, {"d", 2}, {"value", "36"}});
  CHECK(j.at("gw")[0] == nlohmann::ordered_json{{"d", 1}, {"classes", {1, 3, 1}}, {"value", "18"}});
}
