#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

#include "stroud/decimal.hpp"

namespace stroud {

/// Exact rational with canonical sign and reduced terms.
using Rational = mpq_class;

/// Selects t = t_plus or t = t_minus, where t_pm = sqrt(71440 +- 6802 sqrt(19)).
enum class Branch { plus, minus };

const char* to_string(Branch b);

/// Exact element a + b*sqrt(19) + c*t + d*sqrt(19)*t of Q(sqrt(19), t) on a
/// fixed branch. Elements of different branches never combine.
class TowerElement {
 public:
  explicit TowerElement(Branch branch, Rational a = 0, Rational b = 0, Rational c = 0,
                        Rational d = 0);

  static TowerElement sqrt19(Branch branch) { return TowerElement(branch, 0, 1); }
  static TowerElement t(Branch branch) { return TowerElement(branch, 0, 0, 1); }

  Branch branch() const { return branch_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
  bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }

  /// Multiplicative inverse via the conjugates t -> -t, then sqrt19 -> -sqrt19.
  TowerElement inverse() const;

  /// Real sign, using the positive roots for sqrt(19) and t. Exact.
  int sign() const;

  TowerElement operator-() const;
  TowerElement& operator+=(const TowerElement& o);
  TowerElement& operator-=(const TowerElement& o);
  TowerElement& operator*=(const TowerElement& o);

  friend TowerElement operator+(TowerElement x, const TowerElement& y) { return x += y; }
  friend TowerElement operator-(TowerElement x, const TowerElement& y) { return x -= y; }
  friend TowerElement operator*(TowerElement x, const TowerElement& y) { return x *= y; }
  friend TowerElement operator/(const TowerElement& x, const TowerElement& y) {
    return x * y.inverse();
  }
  friend TowerElement operator*(const Rational& q, TowerElement x);
  friend TowerElement operator+(const Rational& q, TowerElement x);

  friend bool operator==(const TowerElement& x, const TowerElement& y);

  std::string str() const;

 private:
  void require_same_branch(const TowerElement& o) const;

  Branch branch_;
  Rational a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const TowerElement& e);

/// The integer t^2 reduction constant on a branch: 71440 +- 6802 sqrt(19).
TowerElement t_squared(Branch branch);

/// Integer enclosure of the real value at fixed-point scale 10^-scale.
DecimalEnclosure enclose(const TowerElement& e, long scale);

/// Correctly rounded (half-even) value at `digits` significant digits.
PrecisionDecimal to_decimal(const TowerElement& e, int digits);

/// Correctly rounded positive square root of a non-negative element.
PrecisionDecimal sqrt_to_decimal(const TowerElement& e, int digits);

/// Dense polynomial with rational coefficients, lowest degree first.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coefficients);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  const Rational& coefficient(int k) const { return coefficients_.at(static_cast<std::size_t>(k)); }

  TowerElement evaluate(const TowerElement& u) const;
  Rational evaluate(const Rational& u) const;
  double evaluate(double u) const;

  UnivariatePolynomial derivative() const;

 private:
  std::vector<Rational> coefficients_;
};

/// 1330425 u^4 - 3108780 u^3 + 2339622 u^2 - (2828796/5) u + 361, u = x^2.
UnivariatePolynomial x_octic_in_square();

/// 53217 v^4 - (363204/5) v^3 + (833454/25) v^2 - (30324/5) v + 361, v = y^2.
UnivariatePolynomial y_octic_in_square();

}  // namespace stroud
