#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stroud/constants.hpp"

namespace stroud {

struct TableRow {
  std::string symbol;
  std::string value;  // d.ddd...E±dd, leading '-' when negative
};

/// The eta, lambda, xi, mu, gamma, A, B, C rows of one rule.
struct TableRendering {
  RuleId rule_id = RuleId::rule1;
  int digits = 0;
  std::vector<TableRow> rows;

  /// Throws DomainError for an unknown symbol.
  const std::string& value(std::string_view symbol) const;
  /// Two aligned columns, one row per line.
  std::string text() const;
};

/// Scientific rendering with `digits` digits after the point, computed from
/// the exact constants.
std::string format_parameter(const ParameterSet& set, Parameter p, int digits);
std::string format_weight(const ParameterSet& set, WeightSymbol w, int digits);

TableRendering emit_table(RuleId id, int digits);

}  // namespace stroud
