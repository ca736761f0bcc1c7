#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "stroud/constants.hpp"

namespace stroud {

using Vec3 = std::array<double, 3>;

struct QuadraturePoint {
  Vec3 xyz{};
  double weight = 0.0;
};

/// One coordinate of a point as +-parameter.
struct SymbolicCoordinate {
  Parameter parameter = Parameter::eta;
  int sign = 1;
};

/// Exact description of a point: which parameters sit where, which weight.
struct PointSymbols {
  std::array<SymbolicCoordinate, 3> coordinates{};
  WeightSymbol weight = WeightSymbol::A;
};

/// A 13-point, degree-5 rule on [-1,1]^3.
///
/// Points are ordered: origin (weight A); the B orbit generators
/// (l,x,x), (x,l,x), (x,x,l) followed by their negatives; then the C orbit
/// (m,m,g), (m,g,m), (g,m,m) followed by their negatives. `symbols[i]`
/// describes `points[i]` in terms of `provenance`.
struct QuadratureRule {
  RuleId rule_id;
  std::string name;
  int dimension = 3;
  int degree = 5;
  std::vector<QuadraturePoint> points;
  std::vector<PointSymbols> symbols;
  ParameterSet provenance;

  std::size_t size() const { return points.size(); }
};

QuadratureRule build_rule(RuleId id);

struct ContainmentReport {
  bool all_inside = true;
  double max_coordinate_magnitude = 0.0;
};

ContainmentReport containment_report(std::span<const QuadraturePoint> points);
inline ContainmentReport containment_report(const QuadratureRule& rule) {
  return containment_report(rule.points);
}

enum class ExportFormat { json, csv, plain };

ExportFormat parse_export_format(const std::string& text);

/// Deterministic serialization; every number is rendered from the exact
/// constants with `digits` digits after the point.
///
///   json:  {"name": ..., "dimension": 3, "degree": 5, "points": [{"xyz": [x,y,z], "w": w}, ...]}
///   csv:   header `x,y,z,w` and 13 rows
///   plain: the parameter table followed by fixed-width point rows
std::string export_rule(const QuadratureRule& rule, ExportFormat format, int digits);

}  // namespace stroud
