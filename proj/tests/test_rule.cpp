#include <gtest/gtest.h>

#include <algorithm>
#include "json.hpp"
#include <sstream>

#include "reference_tables.hpp"
#include "stroud/errors.hpp"
#include "stroud/rule.hpp"

namespace stroud {
namespace {

bool same_point(const Vec3& a, const Vec3& b) { return a == b; }

const QuadraturePoint* find_point(const QuadratureRule& r, const Vec3& x) {
  for (const auto& p : r.points)
    if (same_point(p.xyz, x)) return &p;
  return nullptr;
}

class RuleTest : public ::testing::TestWithParam<RuleId> {};

TEST_P(RuleTest, ThirteenPointsInDocumentedOrder) {
  const QuadratureRule r = build_rule(GetParam());
  ASSERT_EQ(r.size(), 13u);
  ASSERT_EQ(r.symbols.size(), 13u);
  EXPECT_EQ(r.dimension, 3);
  EXPECT_EQ(r.degree, 5);
  EXPECT_EQ(r.points[0].xyz, (Vec3{0, 0, 0}));
  EXPECT_EQ(r.points[0].weight, 32.0 / 19.0);
  const SignedParameters s = signed_parameters(GetParam());
  const RuleWeights w = weights(GetParam());
  EXPECT_EQ(r.points[1].xyz, (Vec3{s.lambda, s.xi, s.xi}));
  EXPECT_EQ(r.points[2].xyz, (Vec3{s.xi, s.lambda, s.xi}));
  EXPECT_EQ(r.points[3].xyz, (Vec3{s.xi, s.xi, s.lambda}));
  EXPECT_EQ(r.points[4].xyz, (Vec3{-s.lambda, -s.xi, -s.xi}));
  EXPECT_EQ(r.points[7].xyz, (Vec3{s.mu, s.mu, s.gamma}));
  EXPECT_EQ(r.points[9].xyz, (Vec3{s.gamma, s.mu, s.mu}));
  EXPECT_EQ(r.points[12].xyz, (Vec3{-s.gamma, -s.mu, -s.mu}));
  for (int i = 1; i <= 6; ++i) EXPECT_EQ(r.points[static_cast<std::size_t>(i)].weight, w.B);
  for (int i = 7; i <= 12; ++i) EXPECT_EQ(r.points[static_cast<std::size_t>(i)].weight, w.C);
  EXPECT_EQ(r.name, std::string("stroud-c3-degree5-") + to_string(GetParam()));
}

TEST_P(RuleTest, WeightsArePositiveAndSumToVolume) {
  const QuadratureRule r = build_rule(GetParam());
  double sum = 0.0;
  for (const auto& p : r.points) {
    EXPECT_GT(p.weight, 0.0);
    sum += p.weight;
  }
  EXPECT_LE(std::abs(sum - 8.0), 2 * (std::nextafter(8.0, 9.0) - 8.0));
  const ParameterSet& e = r.provenance;
  EXPECT_EQ(e.A + Rational(6) * e.B + Rational(6) * e.C, TowerElement(e.A.branch(), 8));
}

TEST_P(RuleTest, CentralSymmetry) {
  const QuadratureRule r = build_rule(GetParam());
  for (const auto& p : r.points) {
    const QuadraturePoint* q = find_point(r, Vec3{-p.xyz[0], -p.xyz[1], -p.xyz[2]});
    ASSERT_NE(q, nullptr);
    EXPECT_EQ(q->weight, p.weight);
  }
}

TEST_P(RuleTest, PermutationOrbitClosure) {
  const QuadratureRule r = build_rule(GetParam());
  for (const auto& p : r.points) {
    std::array<int, 3> perm{0, 1, 2};
    do {
      const Vec3 x{p.xyz[static_cast<std::size_t>(perm[0])], p.xyz[static_cast<std::size_t>(perm[1])],
                   p.xyz[static_cast<std::size_t>(perm[2])]};
      const QuadraturePoint* q = find_point(r, x);
      ASSERT_NE(q, nullptr);
      EXPECT_EQ(q->weight, p.weight);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_P(RuleTest, SymbolsDescribePoints) {
  const QuadratureRule r = build_rule(GetParam());
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t k = 0; k < 3; ++k) {
      const SymbolicCoordinate c = r.symbols[i].coordinates[k];
      const PrecisionDecimal v = signed_parameter_decimal(r.provenance, c.parameter, 25);
      EXPECT_EQ(r.points[i].xyz[k], c.sign * v.to_double());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(BothRules, RuleTest, ::testing::Values(RuleId::rule1, RuleId::rule2));

TEST(Containment, Examples) {
  const ContainmentReport c1 = containment_report(build_rule(RuleId::rule1));
  EXPECT_TRUE(c1.all_inside);
  EXPECT_EQ(c1.max_coordinate_magnitude, signed_parameters(RuleId::rule1).lambda);
  const ContainmentReport c2 = containment_report(build_rule(RuleId::rule2));
  EXPECT_FALSE(c2.all_inside);
  EXPECT_NEAR(c2.max_coordinate_magnitude, 1.0146309695, 1e-10);
  const std::vector<QuadraturePoint> zeros(5);
  const ContainmentReport c0 = containment_report(zeros);
  EXPECT_TRUE(c0.all_inside);
  EXPECT_EQ(c0.max_coordinate_magnitude, 0.0);
}

TEST(Export, JsonRoundTripsToIdenticalDoubles) {
  const QuadratureRule r = build_rule(RuleId::rule1);
  const auto j = nlohmann::json::parse(export_rule(r, ExportFormat::json, 17));
  EXPECT_EQ(j["name"], r.name);
  EXPECT_EQ(j["dimension"], 3);
  EXPECT_EQ(j["degree"], 5);
  ASSERT_EQ(j["points"].size(), 13u);
  for (std::size_t i = 0; i < 13; ++i) {
    const auto& p = j["points"][i];
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(p["xyz"][k].get<double>(), r.points[i].xyz[k]);
    EXPECT_EQ(p["w"].get<double>(), r.points[i].weight);
  }
}

TEST(Export, CsvCarriesPublishedDigits) {
  const std::string csv = export_rule(build_rule(RuleId::rule2), ExportFormat::csv, 32);
  std::istringstream in(csv);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 14u);
  EXPECT_EQ(lines[0], "x,y,z,w");
  const std::string c(testing::kRule2Table[7]);
  EXPECT_EQ(lines[8].substr(lines[8].size() - c.size()), c);
  EXPECT_EQ(lines[13].substr(lines[13].size() - c.size()), c);
}

TEST(Export, PlainContainsTheTable) {
  const std::string plain = export_rule(build_rule(RuleId::rule1), ExportFormat::plain, 32);
  for (auto v : testing::kRule1Table) EXPECT_NE(plain.find(std::string(v)), std::string::npos) << v;
  EXPECT_EQ(plain, export_rule(build_rule(RuleId::rule1), ExportFormat::plain, 32));
}

TEST(Export, FormatParsing) {
  EXPECT_EQ(parse_export_format("json"), ExportFormat::json);
  EXPECT_EQ(parse_export_format("csv"), ExportFormat::csv);
  EXPECT_EQ(parse_export_format("plain"), ExportFormat::plain);
  EXPECT_THROW(parse_export_format("xml"), DomainError);
}

}  // namespace
}  // namespace stroud
