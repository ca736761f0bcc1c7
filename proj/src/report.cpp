#include "stroud/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "stroud/residuals.hpp"

namespace stroud {

namespace {

std::string sci(double v, int frac = 15) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*E", frac, v);
  return buf;
}

std::string sci(const PrecisionDecimal& v, int frac) {
  return v.is_zero() ? "0" : v.scientific(frac);
}

const oracle::SignedRule& derived_rule(const oracle::Derivation& d, RuleId id) {
  return id == RuleId::rule1 ? d.rule1 : d.rule2;
}

}  // namespace

RuleAgreement compare_with_closed_form(const oracle::Derivation& d, RuleId id, double tol) {
  const auto& r = derived_rule(d, id);
  const SignedParameters sp = signed_parameters(id);
  const RuleWeights rw = weights(id);
  RuleAgreement out{.rule_id = id, .rows = {}, .max_rel_error = 0.0, .ok = false};
  const auto add = [&](const char* name, double derived, double closed) {
    const double rel = std::abs(derived - closed) / std::max(1.0, std::abs(closed));
    out.rows.push_back({name, derived, closed, rel});
    out.max_rel_error = std::max(out.max_rel_error, rel);
  };
  add("lambda", r.lambda, sp.lambda);
  add("xi", r.xi, sp.xi);
  add("mu", r.mu, sp.mu);
  add("gamma", r.gamma, sp.gamma);
  add("A", d.A, rw.A);
  add("B", r.B, rw.B);
  add("C", r.C, rw.C);
  out.ok = out.max_rel_error <= tol;
  return out;
}

ExactIdentityCheck exact_identity_check(RuleId id) {
  using residual::m1_from_squares;
  using residual::m2_from_squares;
  const ParameterSet s = parameter_set(id);
  const Branch br = s.A.branch();
  const TowerElement zero(br);
  const auto diag = [&](const TowerElement& w) { return Rational(32) * (Rational(2) * w).inverse(); };
  const auto xq = x_octic_in_square();
  const auto yq = y_octic_in_square();

  ExactIdentityCheck c;
  c.rule_id = id;
  c.m1_b = m1_from_squares(s.lambda_sq, s.xi_sq) == zero;
  c.m1_c = m1_from_squares(s.gamma_sq, s.mu_sq) == zero;
  c.m2_b = m2_from_squares(s.lambda_sq, s.xi_sq) == diag(s.B);
  c.m2_c = m2_from_squares(s.gamma_sq, s.mu_sq) == diag(s.C);
  c.x_quartic_lambda = xq.evaluate(s.lambda_sq) == zero;
  c.x_quartic_gamma = xq.evaluate(s.gamma_sq) == zero;
  c.y_quartic_xi = yq.evaluate(s.xi_sq) == zero;
  c.y_quartic_mu = yq.evaluate(s.mu_sq) == zero;
  c.weight_sum_is_8 = s.A + Rational(6) * s.B + Rational(6) * s.C == TowerElement(br, 8);
  return c;
}

bool HighPrecisionCheck::residuals_ok() const {
  return abs(m3_b) <= residual_bound && abs(m3_c) <= residual_bound && abs(m4) <= residual_bound &&
         abs(m5) <= residual_bound;
}

bool HighPrecisionCheck::quartic_part_is_plus_19() const {
  return abs(m5_quartic_part - PrecisionDecimal(19)) <= residual_bound;
}

HighPrecisionCheck high_precision_check(RuleId id, int digits) {
  const ParameterSet s = parameter_set(id);
  const auto p = [&](Parameter q) { return signed_parameter_decimal(s, q, digits); };
  const PrecisionDecimal lambda = p(Parameter::lambda);
  const PrecisionDecimal xi = p(Parameter::xi);
  const PrecisionDecimal mu = p(Parameter::mu);
  const PrecisionDecimal gamma = p(Parameter::gamma);

  HighPrecisionCheck c;
  c.rule_id = id;
  c.digits = digits;
  c.m3_b = residual::m3(lambda, xi);
  c.m3_c = residual::m3(gamma, mu);
  c.m4 = residual::m4(lambda, xi, mu, gamma);
  c.m5 = residual::m5(lambda, xi, mu, gamma);
  c.m5_quartic_part = residual::m5_quartic_part(lambda, xi, mu, gamma);
  // 14 digits of headroom below the working precision.
  c.residual_bound = PrecisionDecimal::from_parts(1, -(digits - 14), 1);
  return c;
}

oracle::ResidualVector closed_form_residuals(RuleId id) {
  const SignedParameters sp = signed_parameters(id);
  const RuleWeights rw = weights(id);
  return oracle::residuals({sp.lambda, sp.xi, sp.mu, sp.gamma, rw.B, rw.C});
}

DerivationReport build_derivation_report(double tol, int digits) {
  DerivationReport r;
  r.derivation = oracle::derive_all(tol);
  r.rule1 = compare_with_closed_form(r.derivation, RuleId::rule1, tol);
  r.rule2 = compare_with_closed_form(r.derivation, RuleId::rule2, tol);
  r.high_precision1 = high_precision_check(RuleId::rule1, digits);
  r.high_precision2 = high_precision_check(RuleId::rule2, digits);
  return r;
}

std::string DerivationReport::text() const {
  std::ostringstream os;
  const auto& d = derivation;
  os << "Octic roots (descending)\n";
  for (std::size_t i = 0; i < 4; ++i) {
    os << "  x^2: " << sci(d.x_roots[i]) << "    y^2: " << sci(d.y_roots[i]) << '\n';
  }
  os << "\nBranch solutions (m1 pairing, m2 weights)\n";
  os << "  i  x                       y                       w\n";
  for (const auto& s : d.solutions) {
    os << "  " << s.table_index << "  " << sci(std::sqrt(s.x_sq)) << "  " << sci(std::sqrt(s.y_sq))
       << "  " << sci(s.w) << '\n';
  }
  os << "\nPairings (best max residual over role/sign assignments)\n";
  for (const auto& p : d.pairings) {
    os << "  {" << p.first[0] << "," << p.first[1] << "} {" << p.second[0] << "," << p.second[1]
       << "}  " << sci(p.residual_first, 3) << "  " << sci(p.residual_second, 3)
       << (p.valid ? "  valid" : "  rejected") << '\n';
  }
  for (const auto* agreement : {&rule1, &rule2}) {
    os << "\n" << to_string(agreement->rule_id) << ": oracle vs closed form\n";
    for (const auto& row : agreement->rows) {
      os << "  " << row.symbol << std::string(8 - row.symbol.size(), ' ') << sci(row.derived) << "  "
         << sci(row.closed_form) << "  rel " << sci(row.rel_error, 2) << '\n';
    }
    os << "  max rel error " << sci(agreement->max_rel_error, 2)
       << (agreement->ok ? "  AGREE" : "  DISAGREE") << '\n';
  }
  for (const auto* hp : {&high_precision1, &high_precision2}) {
    const int shown = 32;
    os << "\n" << to_string(hp->rule_id) << ": odd-power residuals at " << hp->digits << " digits\n";
    os << "  m3(lambda,xi) " << sci(hp->m3_b, 3) << "\n  m3(gamma,mu)  " << sci(hp->m3_c, 3)
       << "\n  m4            " << sci(hp->m4, 3) << "\n  m5            " << sci(hp->m5, 3) << '\n';
    os << "  all within " << sci(hp->residual_bound, 0) << ": " << (hp->residuals_ok() ? "yes" : "NO")
       << '\n';
    os << "  126 xi^2 mu^2 + 45 gamma^2 lambda^2 + 72 lambda xi mu gamma = "
       << hp->m5_quartic_part.scientific(shown) << '\n';
  }
  os << "\nNote: with m1 = 0 on both orbits, m5 = 0 reduces to\n"
        "  126 xi^2 mu^2 + 45 gamma^2 lambda^2 + 72 lambda xi mu gamma - 19 = 0.\n"
        "A simplified form written with '+ 19 = 0' carries the wrong sign on the\n"
        "constant; the values above evaluate to +19 for both rules"
     << (high_precision1.quartic_part_is_plus_19() && high_precision2.quartic_part_is_plus_19()
             ? " (confirmed).\n"
             : " (NOT confirmed).\n");
  os << "\nResult: " << (ok() ? "oracle reproduces both closed-form rules" : "MISMATCH") << '\n';
  return os.str();
}

std::string format_exactness_summary(const ExactnessReport& report) {
  std::ostringstream os;
  os << report.degree5_passed << "/" << report.degree5_total << " monomials exact";
  if (report.degree6_witness) {
    os << "; degree-6 witness " << report.degree6_witness->exponent.str();
  } else {
    os << "; no degree-6 witness";
  }
  return os.str();
}

}  // namespace stroud
