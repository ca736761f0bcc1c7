#include "stroud/quadrature.hpp"

#include <cmath>
#include <istream>
#include <sstream>

#include "stroud/errors.hpp"
#include "stroud/kernels.hpp"

namespace stroud {

namespace {

double to_double(const Rational& q) { return PrecisionDecimal::from_rational(q, 25).to_double(); }

double ipow(double x, int n) {
  double r = 1.0;
  for (int k = 0; k < n; ++k) r *= x;
  return r;
}

}  // namespace

std::string MonomialExponent::str() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::vector<MonomialExponent> monomials_of_degree(int degree) {
  std::vector<MonomialExponent> out;
  if (degree < 0) return out;
  for (int a = degree; a >= 0; --a) {
    for (int b = degree - a; b >= 0; --b) out.push_back({a, b, degree - a - b});
  }
  return out;
}

std::vector<MonomialExponent> monomials_up_to(int max_degree) {
  std::vector<MonomialExponent> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto level = monomials_of_degree(d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

double evaluate_monomial(const MonomialExponent& e, const Vec3& p) {
  return ipow(p[0], e.a) * ipow(p[1], e.b) * ipow(p[2], e.c);
}

Rational exact_monomial_integral(const MonomialExponent& e) {
  if (e.a < 0 || e.b < 0 || e.c < 0) throw DomainError("negative monomial exponent");
  if (!e.all_even()) return 0;
  return Rational(8, (e.a + 1) * (e.b + 1) * (e.c + 1));
}

void Polynomial3::add_term(const MonomialExponent& e, double coefficient) {
  if (e.a < 0 || e.b < 0 || e.c < 0) throw DomainError("negative monomial exponent");
  double& slot = terms_[e];
  slot += coefficient;
  if (slot == 0.0) terms_.erase(e);
}

int Polynomial3::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
  return d;
}

double Polynomial3::operator()(double x, double y, double z) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) sum += c * ipow(x, e.a) * ipow(y, e.b) * ipow(z, e.c);
  return sum;
}

double Polynomial3::exact_integral() const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) sum += c * to_double(exact_monomial_integral(e));
  return sum;
}

Polynomial3 Polynomial3::monomial(const MonomialExponent& e, double coefficient) {
  Polynomial3 p;
  p.add_term(e, coefficient);
  return p;
}

Polynomial3 Polynomial3::parse(std::istream& in) {
  Polynomial3 p;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    fields.clear();
    fields.str(line);
    long a = 0;
    long b = 0;
    long c = 0;
    double coefficient = 0.0;
    std::string extra;
    if (!(fields >> a >> b >> c >> coefficient) || (fields >> extra) || a < 0 || b < 0 || c < 0) {
      throw DomainError("polynomial line " + std::to_string(line_no) +
                        ": expected `a b c coefficient` with non-negative integer exponents");
    }
    p.add_term({static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)}, coefficient);
  }
  return p;
}

PrecisionDecimal integrate_decimal(const QuadratureRule& rule, const Polynomial3& f, int digits) {
  constexpr int kGuardDigits = 16;
  if (digits < 1) throw DomainError("precision must be positive");
  const int work = digits + kGuardDigits;

  // Rule constants are rounded once to `work` digits; the sum over those
  // decimals is then exact, so symmetric cancellations are exact too.
  std::map<Parameter, Rational> coordinate;
  std::map<WeightSymbol, Rational> weight;
  for (Parameter p : {Parameter::eta, Parameter::lambda, Parameter::xi, Parameter::mu, Parameter::gamma}) {
    coordinate.emplace(p, signed_parameter_decimal(rule.provenance, p, work).to_rational());
  }
  for (WeightSymbol w : {WeightSymbol::A, WeightSymbol::B, WeightSymbol::C}) {
    weight.emplace(w, to_decimal(rule.provenance.weight(w), work).to_rational());
  }
  std::vector<std::pair<MonomialExponent, Rational>> terms;
  for (const auto& [e, c] : f.terms()) terms.emplace_back(e, decimal_from_double(c).to_rational());

  const auto power = [](const Rational& x, int n) {
    Rational r = 1;
    for (int k = 0; k < n; ++k) r *= x;
    return r;
  };
  Rational sum = 0;
  for (const auto& sym : rule.symbols) {
    std::array<Rational, 3> x;
    for (std::size_t k = 0; k < 3; ++k) {
      const auto& c = sym.coordinates[k];
      x[k] = c.sign < 0 ? Rational(-coordinate.at(c.parameter)) : coordinate.at(c.parameter);
    }
    Rational value = 0;
    for (const auto& [e, c] : terms) value += c * power(x[0], e.a) * power(x[1], e.b) * power(x[2], e.c);
    sum += weight.at(sym.weight) * value;
  }
  return PrecisionDecimal::from_rational(sum, digits);
}

ExactnessReport verify_exactness(const QuadratureRule& rule, int max_degree, double tolerance) {
  constexpr int kExactDegree = 5;
  constexpr int kWitnessDegree = 6;
  if (max_degree < kExactDegree) throw DomainError("max_degree must be at least 5");

  ExactnessReport report;
  report.rule_id = rule.rule_id;
  report.max_degree = max_degree;
  report.tolerance = tolerance;

  const auto make_record = [](const MonomialExponent& e, double value) {
    ExactnessRecord r{.exponent = e, .exact = exact_monomial_integral(e), .rule_value = value};
    const double exact = to_double(r.exact);
    r.abs_error = std::abs(value - exact);
    r.rel_error = r.abs_error / std::max(1.0, std::abs(exact));
    return r;
  };

  const auto exponents = monomials_up_to(max_degree);
  const auto values = kernels::monomial_sweep_parallel(rule, exponents);
  report.records.reserve(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    report.records.push_back(make_record(exponents[i], values[i]));
    const auto& r = report.records.back();
    if (r.exponent.degree() <= kExactDegree) {
      ++report.degree5_total;
      if (r.rel_error <= tolerance) ++report.degree5_passed;
      report.max_rel_error_degree5 = std::max(report.max_rel_error_degree5, r.rel_error);
    }
  }

  const auto sixth = monomials_of_degree(kWitnessDegree);
  const auto sixth_values = kernels::monomial_sweep_parallel(rule, sixth);
  for (std::size_t i = 0; i < sixth.size(); ++i) {
    const ExactnessRecord r = make_record(sixth[i], sixth_values[i]);
    if (!report.degree6_witness && r.exponent.all_even() && r.rel_error > report.degree6_threshold) {
      report.degree6_witness = r;
    }
    if (!report.worst_degree6 || r.rel_error > report.worst_degree6->rel_error) {
      report.worst_degree6 = r;
    }
  }
  return report;
}

}  // namespace stroud
