#pragma once

#include <string>
#include <vector>

#include "stroud/constants.hpp"
#include "stroud/oracle.hpp"
#include "stroud/quadrature.hpp"

namespace stroud {

struct ParameterComparison {
  std::string symbol;
  double derived = 0.0;
  double closed_form = 0.0;
  double rel_error = 0.0;  // |derived - closed_form| / max(1, |closed_form|)
};

struct RuleAgreement {
  RuleId rule_id = RuleId::rule1;
  std::vector<ParameterComparison> rows;
  double max_rel_error = 0.0;
  bool ok = false;
};

/// Oracle output against the closed-form doubles of one rule.
RuleAgreement compare_with_closed_form(const oracle::Derivation& d, RuleId id,
                                       double tol = oracle::kDefaultTolerance);

/// m1 = 0 and m2 = 32/(2w) on both orbits, plus both quartics vanishing at
/// all four squared parameters, evaluated exactly in the tower.
struct ExactIdentityCheck {
  RuleId rule_id = RuleId::rule1;
  bool m1_b = false;
  bool m1_c = false;
  bool m2_b = false;
  bool m2_c = false;
  bool x_quartic_lambda = false;
  bool x_quartic_gamma = false;
  bool y_quartic_xi = false;
  bool y_quartic_mu = false;
  bool weight_sum_is_8 = false;

  bool ok() const {
    return m1_b && m1_c && m2_b && m2_c && x_quartic_lambda && x_quartic_gamma && y_quartic_xi &&
           y_quartic_mu && weight_sum_is_8;
  }
};

ExactIdentityCheck exact_identity_check(RuleId id);

/// Odd-power residuals evaluated with decimal parameters at `digits`
/// significant digits, and the quartic part of m5.
struct HighPrecisionCheck {
  RuleId rule_id = RuleId::rule1;
  int digits = 64;
  PrecisionDecimal m3_b;
  PrecisionDecimal m3_c;
  PrecisionDecimal m4;
  PrecisionDecimal m5;
  /// 126 xi^2 mu^2 + 45 gamma^2 lambda^2 + 72 lambda xi mu gamma
  PrecisionDecimal m5_quartic_part;
  PrecisionDecimal residual_bound;

  bool residuals_ok() const;
  /// The quartic part equals +19 to within the residual bound (and so is not -19).
  bool quartic_part_is_plus_19() const;
};

HighPrecisionCheck high_precision_check(RuleId id, int digits = 64);

struct DerivationReport {
  oracle::Derivation derivation;
  RuleAgreement rule1;
  RuleAgreement rule2;
  HighPrecisionCheck high_precision1;
  HighPrecisionCheck high_precision2;

  bool ok() const { return rule1.ok && rule2.ok; }
  std::string text() const;
};

DerivationReport build_derivation_report(double tol = oracle::kDefaultTolerance, int digits = 64);

/// Residual vector of the closed-form doubles of a rule.
oracle::ResidualVector closed_form_residuals(RuleId id);

std::string format_exactness_summary(const ExactnessReport& report);

}  // namespace stroud
