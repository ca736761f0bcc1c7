#include "stroud/rule.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "stroud/errors.hpp"
#include "stroud/table.hpp"

namespace stroud {

namespace {

constexpr std::size_t kRulePoints = 13;

struct OrbitGenerator {
  std::array<Parameter, 3> coordinates;
  WeightSymbol weight;
};

// nu_2..nu_4 and nu_5..nu_7; eta = 0 gives the origin as nu_1.
constexpr std::array<OrbitGenerator, 6> kGenerators{{
    {{Parameter::lambda, Parameter::xi, Parameter::xi}, WeightSymbol::B},
    {{Parameter::xi, Parameter::lambda, Parameter::xi}, WeightSymbol::B},
    {{Parameter::xi, Parameter::xi, Parameter::lambda}, WeightSymbol::B},
    {{Parameter::mu, Parameter::mu, Parameter::gamma}, WeightSymbol::C},
    {{Parameter::mu, Parameter::gamma, Parameter::mu}, WeightSymbol::C},
    {{Parameter::gamma, Parameter::mu, Parameter::mu}, WeightSymbol::C},
}};

std::string rule_name(RuleId id) {
  return std::string("stroud-c3-degree5-") + to_string(id);
}

}  // namespace

QuadratureRule build_rule(RuleId id) {
  QuadratureRule rule{.rule_id = id,
                      .name = rule_name(id),
                      .dimension = 3,
                      .degree = 5,
                      .points = {},
                      .symbols = {},
                      .provenance = parameter_set(id)};
  const SignedParameters sp = signed_parameters(id);
  const RuleWeights rw = weights(id);

  const auto param_value = [&](Parameter p) {
    switch (p) {
      case Parameter::eta: return 0.0;
      case Parameter::lambda: return sp.lambda;
      case Parameter::xi: return sp.xi;
      case Parameter::mu: return sp.mu;
      case Parameter::gamma: return sp.gamma;
    }
    return 0.0;
  };
  const auto weight_value = [&](WeightSymbol w) {
    return w == WeightSymbol::A ? rw.A : (w == WeightSymbol::B ? rw.B : rw.C);
  };
  const auto add_point = [&](const std::array<Parameter, 3>& coords, int sign, WeightSymbol w) {
    QuadraturePoint pt;
    PointSymbols sym;
    sym.weight = w;
    for (std::size_t k = 0; k < 3; ++k) {
      // negating 0.0 would give -0.0; the origin keeps +0.0
      pt.xyz[k] = coords[k] == Parameter::eta ? 0.0 : sign * param_value(coords[k]);
      sym.coordinates[k] = {coords[k], coords[k] == Parameter::eta ? 1 : sign};
    }
    pt.weight = weight_value(w);
    rule.points.push_back(pt);
    rule.symbols.push_back(sym);
  };

  add_point({Parameter::eta, Parameter::eta, Parameter::eta}, 1, WeightSymbol::A);
  for (std::size_t orbit = 0; orbit < 2; ++orbit) {
    for (int sign : {1, -1}) {
      for (std::size_t g = 0; g < 3; ++g) {
        const auto& gen = kGenerators[orbit * 3 + g];
        add_point(gen.coordinates, sign, gen.weight);
      }
    }
  }
  if (rule.points.size() != kRulePoints) {
    throw InternalConsistencyError("rule construction produced the wrong point count");
  }
  return rule;
}

ContainmentReport containment_report(std::span<const QuadraturePoint> points) {
  ContainmentReport report;
  for (const auto& p : points) {
    for (double c : p.xyz) {
      report.max_coordinate_magnitude = std::max(report.max_coordinate_magnitude, std::abs(c));
    }
  }
  report.all_inside = report.max_coordinate_magnitude <= 1.0;
  return report;
}

ExportFormat parse_export_format(const std::string& text) {
  if (text == "json") return ExportFormat::json;
  if (text == "csv") return ExportFormat::csv;
  if (text == "plain") return ExportFormat::plain;
  throw DomainError("unknown export format '" + text + "' (expected json, csv or plain)");
}

std::string export_rule(const QuadratureRule& rule, ExportFormat format, int digits) {
  if (digits < 1) throw DomainError("digit count must be at least 1");

  // Each distinct signed symbol is rendered once.
  std::map<std::pair<Parameter, int>, std::string> coordinate_text;
  std::map<WeightSymbol, std::string> weight_text;
  const auto coord = [&](const SymbolicCoordinate& c) -> const std::string& {
    auto key = std::pair{c.parameter, c.sign};
    auto it = coordinate_text.find(key);
    if (it == coordinate_text.end()) {
      PrecisionDecimal v = signed_parameter_decimal(rule.provenance, c.parameter, digits + 1);
      if (c.sign < 0) v = -v;
      it = coordinate_text.emplace(key, v.scientific(digits)).first;
    }
    return it->second;
  };
  const auto weight = [&](WeightSymbol w) -> const std::string& {
    auto it = weight_text.find(w);
    if (it == weight_text.end()) {
      it = weight_text.emplace(w, format_weight(rule.provenance, w, digits)).first;
    }
    return it->second;
  };

  std::ostringstream os;
  switch (format) {
    case ExportFormat::json: {
      os << "{\n  \"name\": \"" << rule.name << "\",\n  \"dimension\": " << rule.dimension
         << ",\n  \"degree\": " << rule.degree << ",\n  \"points\": [\n";
      for (std::size_t i = 0; i < rule.symbols.size(); ++i) {
        const auto& s = rule.symbols[i];
        os << "    {\"xyz\": [" << coord(s.coordinates[0]) << ", " << coord(s.coordinates[1]) << ", "
           << coord(s.coordinates[2]) << "], \"w\": " << weight(s.weight) << "}"
           << (i + 1 < rule.symbols.size() ? ",\n" : "\n");
      }
      os << "  ]\n}\n";
      break;
    }
    case ExportFormat::csv: {
      os << "x,y,z,w\n";
      for (const auto& s : rule.symbols) {
        os << coord(s.coordinates[0]) << ',' << coord(s.coordinates[1]) << ','
           << coord(s.coordinates[2]) << ',' << weight(s.weight) << '\n';
      }
      break;
    }
    case ExportFormat::plain: {
      os << "# " << rule.name << ": " << rule.size() << " points, degree " << rule.degree
         << " on [-1,1]^3\n";
      os << emit_table(rule.rule_id, digits).text() << '\n';
      const auto width = static_cast<std::size_t>(digits + 8);
      const auto column = [&](const std::string& text) {
        os << std::string(width > text.size() ? width - text.size() : 1, ' ') << text;
      };
      for (const char* head : {"x", "y", "z", "w"}) column(head);
      os << '\n';
      for (const auto& s : rule.symbols) {
        for (const auto& c : s.coordinates) column(coord(c));
        column(weight(s.weight));
        os << '\n';
      }
      break;
    }
  }
  return os.str();
}

}  // namespace stroud
