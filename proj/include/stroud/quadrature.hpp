#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stroud/rule.hpp"
#include "stroud/tower.hpp"

namespace stroud {

/// x^a y^b z^c
struct MonomialExponent {
  int a = 0;
  int b = 0;
  int c = 0;

  int degree() const { return a + b + c; }
  bool all_even() const { return a % 2 == 0 && b % 2 == 0 && c % 2 == 0; }
  std::string str() const;

  friend auto operator<=>(const MonomialExponent&, const MonomialExponent&) = default;
};

/// All monomials of total degree `degree`, x-exponent descending then
/// y-exponent descending: (d,0,0), (d-1,1,0), (d-1,0,1), ...
std::vector<MonomialExponent> monomials_of_degree(int degree);

/// Graded order: degree 0, 1, ..., max_degree.
std::vector<MonomialExponent> monomials_up_to(int max_degree);

double evaluate_monomial(const MonomialExponent& e, const Vec3& p);

/// Integral over [-1,1]^3: zero for any odd exponent, else prod 2/(e_i+1).
Rational exact_monomial_integral(const MonomialExponent& e);

/// Sum of w_i f(x_i, y_i, z_i), accumulated left to right in point order.
template <class F>
double integrate(const QuadratureRule& rule, F&& f) {
  double sum = 0.0;
  for (const auto& p : rule.points) sum += p.weight * f(p.xyz[0], p.xyz[1], p.xyz[2]);
  return sum;
}

/// Sparse polynomial in x, y, z with real coefficients.
class Polynomial3 {
 public:
  Polynomial3() = default;

  /// Adds to the coefficient of x^a y^b z^c; terms that cancel are dropped.
  void add_term(const MonomialExponent& e, double coefficient);

  const std::map<MonomialExponent, double>& terms() const { return terms_; }
  int degree() const;
  double operator()(double x, double y, double z) const;
  double evaluate(const Vec3& p) const { return (*this)(p[0], p[1], p[2]); }

  /// Integral over [-1,1]^3 from the closed-form monomial integrals.
  double exact_integral() const;

  /// Lines `a b c coefficient`, whitespace separated; '#' starts a comment.
  /// Throws DomainError on malformed input.
  static Polynomial3 parse(std::istream& in);
  static Polynomial3 monomial(const MonomialExponent& e, double coefficient = 1.0);

 private:
  std::map<MonomialExponent, double> terms_;
};

/// Quadrature sum evaluated in decimal arithmetic from the exact rule
/// constants rounded to digits + 16, summed exactly and rounded to `digits` significant
/// digits. Coefficients enter as their shortest round-trip decimals.
PrecisionDecimal integrate_decimal(const QuadratureRule& rule, const Polynomial3& f, int digits);

struct ExactnessRecord {
  MonomialExponent exponent;
  Rational exact;
  double rule_value = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;  // abs_error / max(1, |exact|)
};

struct ExactnessReport {
  RuleId rule_id = RuleId::rule1;
  int max_degree = 5;
  double tolerance = 1e-14;
  double degree6_threshold = 1e-3;

  /// Every monomial with |alpha| <= max_degree, in graded order.
  std::vector<ExactnessRecord> records;

  std::size_t degree5_total = 0;
  std::size_t degree5_passed = 0;
  double max_rel_error_degree5 = 0.0;

  /// First all-even degree-6 monomial above the threshold, in graded order.
  std::optional<ExactnessRecord> degree6_witness;
  /// Largest error among all degree-6 monomials.
  std::optional<ExactnessRecord> worst_degree6;

  bool passed() const {
    return degree5_total > 0 && degree5_passed == degree5_total && degree6_witness.has_value();
  }
};

/// Compares the rule against closed-form integrals for every monomial with
/// |alpha| <= max_degree (max_degree >= 5) and searches degree 6 for a
/// failing witness.
ExactnessReport verify_exactness(const QuadratureRule& rule, int max_degree = 5,
                                 double tolerance = 1e-14);

}  // namespace stroud
