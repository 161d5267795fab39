#include "fanoqc/render.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace fanoqc::render {

using json = nlohmann::ordered_json;

std::string matrix_text(const PolyMatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.dim(); ++i) {
    os << '[';
    for (int j = 0; j < m.dim(); ++j) {
      if (j) os << ", ";
      os << m.at(i, j).str();
    }
    os << "]\n";
  }
  return os.str();
}

namespace {

std::string rat_latex(const BigRat& r) {
  if (r.is_integer()) return r.str();
  BigRat a = r.abs();
  std::string s = r.sign() < 0 ? "-" : "";
  return s + "\\frac{" + a.num().get_str() + "}{" + a.den().get_str() + "}";
}

void var_latex(std::ostream& os, const char* name, int exp) {
  if (exp == 0) return;
  os << name;
  if (exp != 1) os << "^{" << exp << '}';
}

std::string term_latex(QHMonomial m, const BigRat& magnitude) {
  std::ostringstream os;
  if (magnitude != BigRat(1) || (m.q == 0 && m.h == 0)) os << rat_latex(magnitude);
  var_latex(os, "q", m.q);
  var_latex(os, "h", m.h);
  return os.str();
}

}  // namespace

std::string poly_latex(const QHPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    os << term_latex(m, c.abs());
    first = false;
  }
  return os.str();
}

std::string matrix_latex(const PolyMatrix& m) {
  std::ostringstream os;
  os << "\\left(\\begin{array}{" << std::string(static_cast<size_t>(m.dim()), 'c') << "}\n";
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      if (j) os << " & ";
      os << poly_latex(m.at(i, j));
    }
    os << " \\\\\n";
  }
  os << "\\end{array}\\right)\n";
  return os.str();
}

json matrix_json(const PolyMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string operator_latex(const DiffOperator& op) {
  if (op.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = op.order(); j >= 0; --j) {
    const QHPoly& c = op.coeff(j);
    if (c.is_zero()) continue;
    bool negate = c.is_monomial() && c.terms().begin()->second.sign() < 0;
    QHPoly shown = negate ? -c : c;
    if (first) {
      if (negate) os << '-';
    } else {
      os << (negate ? " - " : " + ");
    }
    first = false;
    std::string cs = poly_latex(shown);
    if (j == 0) {
      os << (shown.is_monomial() ? cs : "\\left(" + cs + "\\right)");
      continue;
    }
    if (!shown.is_one()) os << (shown.is_monomial() ? cs : "\\left(" + cs + "\\right)");
    os << "(h\\partial)";
    if (j != 1) os << "^{" << j << '}';
  }
  return os.str();
}

namespace {

// b̃ as printed in the quantum relation: b for N-k >= 2, b + k!q otherwise.
std::string b_tilde(const FanoParams& p) {
  if (p.fano_index() >= 2) return "b";
  return "(b + " + factorial(p.k).str() + "*q)";
}

// Closed forms for insertions from the primitive part, no basis chosen.
std::string primitive_part_text(const FanoParams& p) {
  const int N = p.N, k = p.k;
  if (k == 1) return "primitive part P(M) = 0\n";
  std::string bt = b_tilde(p);
  std::string tail = k == 2 ? "" : "*" + bt + (k == 3 ? "" : "^" + std::to_string(k - 2));
  return "primitive part (a, a' in P(M)): " + bt + "∘a = 0; a∘a' = (1/" + std::to_string(k) +
         ")(a,a')(" + bt + "^" + std::to_string(N - 2) + " - " + pow(BigRat(k), k).str() + "*q" +
         tail + ")\n";
}

}  // namespace

std::string gw_table_text(const GWTable& t) {
  std::ostringstream os;
  const int N = t.params.N, k = t.params.k, nk = t.params.fano_index();
  os << "M_" << N << "^" << k << ": degree " << k << " Fano hypersurface in CP^" << N - 1
     << "\n";
  for (const auto& [key, v] : t.L) {
    auto [d, m] = key;
    os << "L_" << m << "^" << d << " = " << v.str() << "    GW_" << d << "(b, b_" << N - 2 - m
       << ", b_" << m - 1 + d * nk << ") = " << (BigRat(k) * v).str() << "\n";
  }
  os << primitive_part_text(t.params);
  os << "k*L integral: " << (t.gw_integral() ? "yes" : "no") << "\n";
  return os.str();
}

std::string gw_table_latex(const GWTable& t) {
  std::ostringstream os;
  const int N = t.params.N, k = t.params.k, nk = t.params.fano_index();
  os << "\\begin{align*}\n";
  for (const auto& [key, v] : t.L) {
    auto [d, m] = key;
    os << "L_{" << m << "}^{" << d << "} &= " << rat_latex(v) << ", & \\mathrm{GW}_{" << d
       << "}(b, b_{" << N - 2 - m << "}, b_{" << m - 1 + d * nk << "}) &= "
       << rat_latex(BigRat(k) * v) << " \\\\\n";
  }
  os << "\\end{align*}\n";
  return os.str();
}

json gw_table_json(const GWTable& t) {
  json j;
  j["N"] = t.params.N;
  j["k"] = t.params.k;
  json l = json::array();
  json gw = json::array();
  for (const auto& rec : gw_invariants(t)) {
    // gw_invariants iterates (d, m) ascending, same as t.L
    json e;
    int m = t.params.N - 2 - rec.classes[1];
    e["m"] = m;
    e["d"] = rec.d;
    e["value"] = t.value(m, rec.d).str();
    l.push_back(std::move(e));
    json g;
    g["d"] = rec.d;
    g["classes"] = {rec.classes[0], rec.classes[1], rec.classes[2]};
    g["value"] = rec.value.str();
    gw.push_back(std::move(g));
  }
  j["L"] = std::move(l);
  j["gw"] = std::move(gw);
  return j;
}

GWTable gw_table_from_json(const nlohmann::ordered_json& j, bool allow_small) {
  GWTable t{FanoParams::make(j.at("N").get<int>(), j.at("k").get<int>(), allow_small), {}};
  for (const auto& e : j.at("L"))
    t.L[{e.at("d").get<int>(), e.at("m").get<int>()}] = BigRat(e.at("value").get<std::string>());
  return t;
}

namespace {

struct QEntry {
  int i, alpha, band;
  std::vector<QHPoly> values;
};

// Stored coefficients in solve order: gamma ascending, i descending.
std::vector<QEntry> q_entries(const QSystem& s) {
  std::vector<QEntry> out;
  const FanoParams& p = s.params();
  int gamma_total = (p.k >= 2) ? s.alpha_max(0) : 0;
  for (int gamma = 1; gamma <= gamma_total; ++gamma)
    for (int i = p.k - 2; i >= 0; --i) {
      if (gamma > s.alpha_max(i)) continue;
      int band = i + gamma * p.fano_index();
      out.push_back({i, gamma, band, s.coeff(i, gamma).diagonal_component(band)});
    }
  return out;
}

}  // namespace

std::string qsystem_text(const QSystem& s) {
  std::ostringstream os;
  for (const auto& e : q_entries(s)) {
    os << "Q_" << e.i << "^" << e.alpha << " = diag_" << e.band << "(";
    for (size_t v = 0; v < e.values.size(); ++v) {
      if (v) os << ", ";
      os << e.values[v].str();
    }
    os << ")\n";
  }
  os << "Q_0 =\n" << matrix_text(s.q_poly(0));
  return os.str();
}

std::string qsystem_latex(const QSystem& s) {
  std::ostringstream os;
  os << "\\begin{align*}\n";
  for (const auto& e : q_entries(s)) {
    os << "Q_" << e.i << "^" << e.alpha << " &= \\mathrm{diag}_" << e.band << "(";
    for (size_t v = 0; v < e.values.size(); ++v) {
      if (v) os << ", ";
      os << poly_latex(e.values[v]);
    }
    os << ") \\\\\n";
  }
  os << "\\end{align*}\nQ_0 =\n" << matrix_latex(s.q_poly(0));
  return os.str();
}

json qsystem_json(const QSystem& s) {
  json j;
  j["N"] = s.params().N;
  j["k"] = s.params().k;
  json arr = json::array();
  for (const auto& e : q_entries(s)) {
    json je;
    je["i"] = e.i;
    je["alpha"] = e.alpha;
    je["band"] = e.band;
    json vals = json::array();
    for (const auto& v : e.values) vals.push_back(v.str());
    je["values"] = std::move(vals);
    arr.push_back(std::move(je));
  }
  j["Q"] = std::move(arr);
  j["Q0"] = matrix_json(s.q_poly(0));
  return j;
}

}  // namespace fanoqc::render
