#pragma once

#include <array>
#include <string>

#include "stroud/tower.hpp"

namespace stroud {

/// Rule 1 has all points inside [-1,1]^3; rule 2 has some outside.
enum class RuleId { rule1 = 1, rule2 = 2 };

/// Parses "1"/"2"/"rule1"/"rule2"; throws DomainError otherwise.
RuleId parse_rule_id(const std::string& text);
RuleId rule_id_from_int(int id);
const char* to_string(RuleId id);

/// Branch of the tower carrying a rule's constants.
Branch branch_of(RuleId id);

enum class Parameter { eta, lambda, xi, mu, gamma };
enum class WeightSymbol { A, B, C };

const char* symbol_name(Parameter p);
const char* symbol_name(WeightSymbol w);

/// The sign chosen for the square root of each squared parameter.
struct SignConvention {
  int lambda = 1;
  int xi = -1;
  int mu = 1;
  int gamma = 1;

  int sign_of(Parameter p) const;
};

/// Exact closed-form constants of one rule.
struct ParameterSet {
  RuleId rule_id;
  TowerElement eta;
  TowerElement lambda_sq;
  TowerElement xi_sq;
  TowerElement mu_sq;
  TowerElement gamma_sq;
  TowerElement A;
  TowerElement B;
  TowerElement C;
  SignConvention sign_convention;

  const TowerElement& squared(Parameter p) const;
  const TowerElement& weight(WeightSymbol w) const;
};

/// Constants built from the analytical formulae, never from decimal literals.
ParameterSet parameter_set(RuleId id);

struct SignedParameters {
  double lambda = 0.0;
  double xi = 0.0;
  double mu = 0.0;
  double gamma = 0.0;
};

struct RuleWeights {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
};

/// Correctly rounded signed parameter (sqrt of its square, with the rule's sign).
PrecisionDecimal signed_parameter_decimal(const ParameterSet& set, Parameter p, int digits);

/// Double values, obtained by rounding to 25 digits and parsing.
SignedParameters signed_parameters(RuleId id);
RuleWeights weights(RuleId id);

}  // namespace stroud
