#include "stroud/table.hpp"

#include <sstream>

#include "stroud/errors.hpp"

namespace stroud {

namespace {

void require_digits(int digits) {
  if (digits < 1) throw DomainError("digit count must be at least 1");
}

}  // namespace

std::string format_parameter(const ParameterSet& set, Parameter p, int digits) {
  require_digits(digits);
  return signed_parameter_decimal(set, p, digits + 1).scientific(digits);
}

std::string format_weight(const ParameterSet& set, WeightSymbol w, int digits) {
  require_digits(digits);
  return to_decimal(set.weight(w), digits + 1).scientific(digits);
}

TableRendering emit_table(RuleId id, int digits) {
  require_digits(digits);
  const ParameterSet set = parameter_set(id);
  TableRendering table{.rule_id = id, .digits = digits, .rows = {}};
  for (Parameter p : {Parameter::eta, Parameter::lambda, Parameter::xi, Parameter::mu, Parameter::gamma}) {
    table.rows.push_back({symbol_name(p), format_parameter(set, p, digits)});
  }
  for (WeightSymbol w : {WeightSymbol::A, WeightSymbol::B, WeightSymbol::C}) {
    table.rows.push_back({symbol_name(w), format_weight(set, w, digits)});
  }
  return table;
}

const std::string& TableRendering::value(std::string_view symbol) const {
  for (const auto& row : rows) {
    if (row.symbol == symbol) return row.value;
  }
  throw DomainError("no table row for symbol '" + std::string(symbol) + "'");
}

std::string TableRendering::text() const {
  std::ostringstream os;
  for (const auto& row : rows) {
    os << row.symbol << std::string(8 - row.symbol.size(), ' ');
    // positive values get a blank where the minus sign would go
    if (row.value.front() != '-') os << ' ';
    os << row.value << '\n';
  }
  return os.str();
}

}  // namespace stroud
