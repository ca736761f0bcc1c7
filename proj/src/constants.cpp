#include "stroud/constants.hpp"

#include "stroud/errors.hpp"

namespace stroud {

namespace {

constexpr int kDoubleConversionDigits = 25;

// (p + q sqrt19 + r t) / den on a branch.
TowerElement over(Branch br, long p, long q, long r, long den) {
  const Rational inv(1, den);
  return TowerElement(br, Rational(p) * inv, Rational(q) * inv, Rational(r) * inv);
}

// 133225 / (p + q sqrt19 + (r + s sqrt19) t)
TowerElement weight_formula(Branch br, long p, long q, long r, long s) {
  return Rational(133225) * TowerElement(br, p, q, r, s).inverse();
}

}  // namespace

RuleId rule_id_from_int(int id) {
  if (id == 1) return RuleId::rule1;
  if (id == 2) return RuleId::rule2;
  throw DomainError("unknown rule id " + std::to_string(id) + " (expected 1 or 2)");
}

RuleId parse_rule_id(const std::string& text) {
  if (text == "1" || text == "rule1") return RuleId::rule1;
  if (text == "2" || text == "rule2") return RuleId::rule2;
  throw DomainError("unknown rule id '" + text + "' (expected 1 or 2)");
}

const char* to_string(RuleId id) { return id == RuleId::rule1 ? "rule1" : "rule2"; }

Branch branch_of(RuleId id) { return id == RuleId::rule1 ? Branch::plus : Branch::minus; }

const char* symbol_name(Parameter p) {
  switch (p) {
    case Parameter::eta: return "eta";
    case Parameter::lambda: return "lambda";
    case Parameter::xi: return "xi";
    case Parameter::mu: return "mu";
    case Parameter::gamma: return "gamma";
  }
  return "?";
}

const char* symbol_name(WeightSymbol w) {
  switch (w) {
    case WeightSymbol::A: return "A";
    case WeightSymbol::B: return "B";
    case WeightSymbol::C: return "C";
  }
  return "?";
}

int SignConvention::sign_of(Parameter p) const {
  switch (p) {
    case Parameter::eta: return 1;
    case Parameter::lambda: return lambda;
    case Parameter::xi: return xi;
    case Parameter::mu: return mu;
    case Parameter::gamma: return gamma;
  }
  return 1;
}

const TowerElement& ParameterSet::squared(Parameter p) const {
  switch (p) {
    case Parameter::eta: return eta;
    case Parameter::lambda: return lambda_sq;
    case Parameter::xi: return xi_sq;
    case Parameter::mu: return mu_sq;
    case Parameter::gamma: return gamma_sq;
  }
  throw DomainError("unknown parameter");
}

const TowerElement& ParameterSet::weight(WeightSymbol w) const {
  switch (w) {
    case WeightSymbol::A: return A;
    case WeightSymbol::B: return B;
    case WeightSymbol::C: return C;
  }
  throw DomainError("unknown weight");
}

ParameterSet parameter_set(RuleId id) {
  const Branch br = branch_of(id);
  const TowerElement zero(br);
  const TowerElement center_weight(br, Rational(32, 19));
  if (id == RuleId::rule1) {
    return ParameterSet{
        .rule_id = id,
        .eta = zero,
        .lambda_sq = over(br, 1919, -148, 4, 3285),
        .xi_sq = over(br, 1121, 74, -2, 3285),
        .mu_sq = over(br, 1121, 74, 2, 3285),
        .gamma_sq = over(br, 1919, -148, -4, 3285),
        .A = center_weight,
        .B = weight_formula(br, 260072, -1520, 133, -37),
        .C = weight_formula(br, 260072, -1520, -133, 37),
        .sign_convention = {},
    };
  }
  return ParameterSet{
      .rule_id = id,
      .eta = zero,
      .lambda_sq = over(br, 1919, 148, -4, 3285),
      .xi_sq = over(br, 1121, -74, 2, 3285),
      .mu_sq = over(br, 1121, -74, -2, 3285),
      .gamma_sq = over(br, 1919, 148, 4, 3285),
      .A = center_weight,
      .B = weight_formula(br, 260072, 1520, -133, -37),
      .C = weight_formula(br, 260072, 1520, 133, 37),
      .sign_convention = {},
  };
}

PrecisionDecimal signed_parameter_decimal(const ParameterSet& set, Parameter p, int digits) {
  PrecisionDecimal v = sqrt_to_decimal(set.squared(p), digits);
  return set.sign_convention.sign_of(p) < 0 ? -v : v;
}

SignedParameters signed_parameters(RuleId id) {
  const ParameterSet set = parameter_set(id);
  const auto value = [&](Parameter p) {
    return signed_parameter_decimal(set, p, kDoubleConversionDigits).to_double();
  };
  return {value(Parameter::lambda), value(Parameter::xi), value(Parameter::mu),
          value(Parameter::gamma)};
}

RuleWeights weights(RuleId id) {
  const ParameterSet set = parameter_set(id);
  const auto value = [](const TowerElement& w) {
    return to_decimal(w, kDoubleConversionDigits).to_double();
  };
  return {value(set.A), value(set.B), value(set.C)};
}

}  // namespace stroud
