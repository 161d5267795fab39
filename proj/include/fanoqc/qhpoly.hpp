#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fanoqc/bigrat.hpp"
#include "fanoqc/error.hpp"

namespace fanoqc {

/// Exponent pair of a monomial q^a h^b. q-exponents are never negative;
/// h-exponents may be (connection forms carry a single 1/h).
struct QHMonomial {
  int q = 0;
  int h = 0;
  friend auto operator<=>(const QHMonomial&, const QHMonomial&) = default;
};

/// Weight of q^a h^b under deg h = 2, deg q = 2(N-k).
inline int monomial_weight(QHMonomial m, int N, int k) {
  return 2 * m.q * (N - k) + 2 * m.h;
}

/// Polynomial in q and h with exact rational coefficients. Terms are kept
/// sorted by (q-exp, h-exp); zero coefficients are never stored.
class QHPoly {
 public:
  using TermMap = std::map<QHMonomial, BigRat>;

  QHPoly() = default;
  QHPoly(BigRat c) { insert({0, 0}, std::move(c)); }  // NOLINT: implicit by design
  QHPoly(long c) : QHPoly(BigRat(c)) {}               // NOLINT
  QHPoly(int c) : QHPoly(BigRat(c)) {}                // NOLINT

  static QHPoly monomial(BigRat c, int q_exp, int h_exp);
  static QHPoly q(int exp = 1) { return monomial(BigRat(1), exp, 0); }
  static QHPoly h(int exp = 1) { return monomial(BigRat(1), 0, exp); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Single term c*q^a*h^b (or zero)?
  bool is_monomial() const { return terms_.size() <= 1; }
  /// True when no monomial carries a negative h-exponent.
  bool is_h_polynomial() const;
  /// Coefficient of q^a h^b (zero when absent).
  BigRat coeff(int q_exp, int h_exp) const;
  const TermMap& terms() const { return terms_; }

  QHPoly& operator+=(const QHPoly& o);
  QHPoly& operator-=(const QHPoly& o);
  QHPoly& operator*=(const QHPoly& o) { return *this = *this * o; }
  friend QHPoly operator+(QHPoly a, const QHPoly& b) { return a += b; }
  friend QHPoly operator-(QHPoly a, const QHPoly& b) { return a -= b; }
  friend QHPoly operator*(const QHPoly& a, const QHPoly& b);
  QHPoly operator-() const;

  friend bool operator==(const QHPoly& a, const QHPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const QHPoly& a, const QHPoly& b) { return !(a == b); }

  /// Multiply by c*q^dq*h^dh, shifting every exponent pair.
  QHPoly shifted(const BigRat& c, int dq, int dh) const;
  /// Substitute q = 0.
  QHPoly at_q0() const;
  /// Apply the Euler operator q d/dq (this is d/dt on q = e^t).
  QHPoly euler_derivative() const;

  /// Canonical text: terms sorted ascending, e.g. "1 + 24*q + 4464*q^2".
  std::string str() const;
  /// Inverse of str(); accepts exactly the canonical grammar.
  static QHPoly parse(std::string_view text);

 private:
  void insert(QHMonomial m, BigRat c);
  TermMap terms_;
};

enum class Homogeneity { Homogeneous, Inhomogeneous, Zero };

struct WeightedDegree {
  Homogeneity status = Homogeneity::Zero;
  int degree = 0;  // meaningful only when Homogeneous
  std::vector<QHMonomial> offenders;  // monomials breaking homogeneity
};

/// Weighted degree under deg h = 2, deg q = 2(N-k). A zero polynomial has
/// status Zero (callers treat it as having any degree).
WeightedDegree weighted_degree(const QHPoly& p, int N, int k);

/// Zero counts as homogeneous of every degree.
bool homogeneous_of_degree(const QHPoly& p, int N, int k, int degree);

}  // namespace fanoqc
