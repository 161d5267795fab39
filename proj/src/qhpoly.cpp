#include "fanoqc/qhpoly.hpp"

#include <cctype>
#include <sstream>

namespace fanoqc {

QHPoly QHPoly::monomial(BigRat c, int q_exp, int h_exp) {
  QHPoly p;
  p.insert({q_exp, h_exp}, std::move(c));
  return p;
}

void QHPoly::insert(QHMonomial m, BigRat c) {
  if (c.is_zero()) return;
  if (m.q < 0) throw Error("negative q-exponent");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool QHPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == QHMonomial{0, 0});
}

bool QHPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == QHMonomial{0, 0} &&
         terms_.begin()->second == BigRat(1);
}

bool QHPoly::is_h_polynomial() const {
  for (const auto& [m, c] : terms_)
    if (m.h < 0) return false;
  return true;
}

BigRat QHPoly::coeff(int q_exp, int h_exp) const {
  auto it = terms_.find({q_exp, h_exp});
  return it == terms_.end() ? BigRat(0) : it->second;
}

QHPoly& QHPoly::operator+=(const QHPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

QHPoly& QHPoly::operator-=(const QHPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, fresh] = terms_.emplace(m, -c);
    if (!fresh) {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

QHPoly operator*(const QHPoly& a, const QHPoly& b) {
  QHPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      r.insert({ma.q + mb.q, ma.h + mb.h}, ca * cb);
  return r;
}

QHPoly QHPoly::operator-() const {
  QHPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

QHPoly QHPoly::shifted(const BigRat& c, int dq, int dh) const {
  QHPoly r;
  for (const auto& [m, coef] : terms_) r.insert({m.q + dq, m.h + dh}, c * coef);
  return r;
}

QHPoly QHPoly::at_q0() const {
  QHPoly r;
  for (const auto& [m, c] : terms_)
    if (m.q == 0) r.terms_.emplace(m, c);
  return r;
}

QHPoly QHPoly::euler_derivative() const {
  QHPoly r;
  for (const auto& [m, c] : terms_)
    if (m.q != 0) r.terms_.emplace(m, BigRat(m.q) * c);
  return r;
}

namespace {

void render_var(std::ostream& os, const char* name, int exp, bool& lead) {
  if (exp == 0) return;
  if (!lead) os << '*';
  lead = false;
  os << name;
  if (exp != 1) os << '^' << exp;
}

void render_term(std::ostream& os, QHMonomial m, const BigRat& magnitude) {
  bool lead = true;
  if (magnitude != BigRat(1) || (m.q == 0 && m.h == 0)) {
    os << magnitude.str();
    lead = false;
  }
  render_var(os, "q", m.q, lead);
  render_var(os, "h", m.h, lead);
}

}  // namespace

std::string QHPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    render_term(os, m, c.abs());
    first = false;
  }
  return os.str();
}

namespace {

struct Cursor {
  std::string_view s;
  size_t i = 0;
  bool done() const { return i >= s.size(); }
  char peek() const { return s[i]; }
  void skip_ws() {
    while (!done() && peek() == ' ') ++i;
  }
};

int parse_int(Cursor& c) {
  size_t start = c.i;
  if (!c.done() && (c.peek() == '-' || c.peek() == '+')) ++c.i;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.i;
  if (c.i == start) throw ParseError("expected integer in polynomial");
  return std::stoi(std::string(c.s.substr(start, c.i - start)));
}

BigRat parse_number(Cursor& c) {
  size_t start = c.i;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.i;
  if (c.i == start) throw ParseError("expected number in polynomial");
  std::string num(c.s.substr(start, c.i - start));
  if (!c.done() && c.peek() == '/') {
    ++c.i;
    size_t dstart = c.i;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.i;
    if (c.i == dstart) throw ParseError("expected denominator");
    num += '/';
    num += std::string(c.s.substr(dstart, c.i - dstart));
  }
  return BigRat(num);
}

// term := number ('*' var)* | var ('*' var)*   with var := ('q'|'h')('^' int)?
void parse_term(Cursor& c, int sign, QHPoly& acc) {
  BigRat coef(sign);
  int qe = 0, he = 0;
  bool first = true;
  for (;;) {
    if (c.done()) break;
    char ch = c.peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (!first) throw ParseError("misplaced number in polynomial term");
      coef *= parse_number(c);
    } else if (ch == 'q' || ch == 'h') {
      ++c.i;
      int e = 1;
      if (!c.done() && c.peek() == '^') {
        ++c.i;
        e = parse_int(c);
      }
      (ch == 'q' ? qe : he) += e;
    } else {
      throw ParseError("unexpected character in polynomial term");
    }
    first = false;
    if (!c.done() && c.peek() == '*') {
      ++c.i;
      continue;
    }
    break;
  }
  if (first) throw ParseError("empty polynomial term");
  acc += QHPoly::monomial(coef, qe, he);
}

}  // namespace

QHPoly QHPoly::parse(std::string_view text) {
  Cursor c{text};
  c.skip_ws();
  if (c.done()) throw ParseError("empty polynomial");
  QHPoly acc;
  int sign = 1;
  if (c.peek() == '-') {
    sign = -1;
    ++c.i;
    c.skip_ws();
  }
  for (;;) {
    parse_term(c, sign, acc);
    c.skip_ws();
    if (c.done()) break;
    char op = c.peek();
    if (op != '+' && op != '-') throw ParseError("expected '+' or '-'");
    sign = (op == '-') ? -1 : 1;
    ++c.i;
    c.skip_ws();
  }
  return acc;
}

WeightedDegree weighted_degree(const QHPoly& p, int N, int k) {
  WeightedDegree r;
  if (p.is_zero()) return r;
  r.status = Homogeneity::Homogeneous;
  bool have = false;
  for (const auto& [m, c] : p.terms()) {
    int w = monomial_weight(m, N, k);
    if (!have) {
      r.degree = w;
      have = true;
    } else if (w != r.degree) {
      r.status = Homogeneity::Inhomogeneous;
      r.offenders.push_back(m);
    }
  }
  return r;
}

bool homogeneous_of_degree(const QHPoly& p, int N, int k, int degree) {
  for (const auto& [m, c] : p.terms())
    if (monomial_weight(m, N, k) != degree) return false;
  return true;
}

}  // namespace fanoqc
