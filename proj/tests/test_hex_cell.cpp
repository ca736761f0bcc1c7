#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "gauss_legendre.hpp"
#include "stroud/errors.hpp"
#include "stroud/hex_cell.hpp"
#include "stroud/kernels.hpp"

namespace stroud {
namespace {

const auto one = [](double, double, double) { return 1.0; };

Mat3 random_matrix(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    Mat3 a{};
    for (auto& row : a)
      for (auto& v : row) v = u(rng);
    if (determinant(a) > 0.1) return a;
  }
}

TEST(HexCell, ReferenceCornersAndMap) {
  const auto& c = HexCell::reference_corners();
  EXPECT_EQ(c[0], (Vec3{-1, -1, -1}));
  EXPECT_EQ(c[6], (Vec3{1, 1, 1}));
  const HexCell box = HexCell::box({0, 0, 0}, {1, 2, 4});
  EXPECT_EQ(box.map({0, 0, 0}), (Vec3{0.5, 1, 2}));
  EXPECT_EQ(box.map({1, 1, 1}), (Vec3{1, 2, 4}));
  EXPECT_DOUBLE_EQ(box.jacobian_determinant({0.3, -0.2, 0.9}), 1.0);
  EXPECT_DOUBLE_EQ(determinant({Vec3{2, 0, 0}, Vec3{0, 3, 0}, Vec3{1, 0, 4}}), 24.0);
}

TEST(IntegrateOverHex, Examples) {
  for (RuleId id : {RuleId::rule1, RuleId::rule2}) {
    const QuadratureRule r = build_rule(id);
    EXPECT_NEAR(integrate_over_hex(r, HexCell::box({0, 0, 0}, {1, 1, 1}), one), 1.0, 1e-14);
    EXPECT_NEAR(integrate_over_hex(r, HexCell::box({-2, -2, -2}, {2, 2, 2}), one) / 64.0, 1.0, 1e-14);
    const HexCell shear = HexCell::affine({Vec3{1, 0.5, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}, {0, 0, 0});
    EXPECT_NEAR(integrate_over_hex(r, shear, one), 8.0, 1e-14);
  }
}

TEST(IntegrateOverHex, InvertedCellIsRejected) {
  const QuadratureRule r = build_rule(RuleId::rule1);
  const HexCell mirrored = HexCell::affine({Vec3{-1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}, {0, 0, 0});
  EXPECT_THROW(map_rule(r, mirrored), InvertedCellError);
  const HexCell flat = HexCell::box({0, 0, 0}, {1, 1, 0});
  EXPECT_THROW(integrate_over_hex(r, flat, one), InvertedCellError);
}

TEST(IntegrateOverHex, AffineDegreeFiveMatchesGaussLegendre) {
  std::mt19937 rng(2718);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (RuleId id : {RuleId::rule1, RuleId::rule2}) {
    const QuadratureRule r = build_rule(id);
    for (int trial = 0; trial < 25; ++trial) {
      const Mat3 a = random_matrix(rng);
      const Vec3 b{coef(rng), coef(rng), coef(rng)};
      const HexCell cell = HexCell::affine(a, b);
      Polynomial3 p;
      for (const auto& e : monomials_up_to(5)) p.add_term(e, coef(rng));
      const auto image = [&](double x, double y, double z) {
        return Vec3{a[0][0] * x + a[0][1] * y + a[0][2] * z + b[0], a[1][0] * x + a[1][1] * y + a[1][2] * z + b[1],
                    a[2][0] * x + a[2][1] * y + a[2][2] * z + b[2]};
      };
      const double reference =
          determinant(a) * testing::gauss_legendre_3x3x3([&](double x, double y, double z) { return p.evaluate(image(x, y, z)); });
      const double value = integrate_over_hex(r, cell, p);
      EXPECT_LE(std::abs(value - reference) / std::max(1.0, std::abs(reference)), 1e-12);
    }
  }
}

TEST(HexCell, ParseVertexFile) {
  std::istringstream in(
      "# unit cube\n0 0 0\n1 0 0\n1 1 0\n0 1 0\n0 0 1\n1 0 1\n1 1 1\n0 1 1\n");
  const HexCell c = HexCell::parse(in);
  EXPECT_EQ(c.vertices()[6], (Vec3{1, 1, 1}));
  EXPECT_NEAR(integrate_over_hex(build_rule(RuleId::rule2), c, one), 1.0, 1e-14);
  std::istringstream short_file("0 0 0\n1 0 0\n");
  EXPECT_THROW(HexCell::parse(short_file), DomainError);
}

std::vector<HexCell> jittered_cells(std::size_t n) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> jitter(-0.1, 0.1);
  std::vector<HexCell> cells;
  for (std::size_t i = 0; i < n; ++i) {
    std::array<Vec3, 8> v{};
    for (std::size_t k = 0; k < 8; ++k) {
      const Vec3& c = HexCell::reference_corners()[k];
      v[k] = {static_cast<double>(i) + c[0] + jitter(rng), c[1] + jitter(rng), c[2] + jitter(rng)};
    }
    cells.emplace_back(v);
  }
  return cells;
}

TEST(Kernels, ParallelMatchesSerialBitwise) {
  const QuadratureRule r = build_rule(RuleId::rule1);
  const auto exps = monomials_up_to(12);
  EXPECT_EQ(kernels::monomial_sweep_serial(r, exps), kernels::monomial_sweep_parallel(r, exps));
  Polynomial3 p;
  p.add_term({5, 0, 0}, 1.0);
  p.add_term({1, 2, 2}, -0.5);
  p.add_term({0, 0, 0}, 2.0);
  const auto cells = jittered_cells(257);
  const auto serial = kernels::integrate_cells_serial(r, cells, p);
  EXPECT_EQ(serial, kernels::integrate_cells_parallel(r, cells, p));
  EXPECT_GE(kernels::max_threads(), 1);
}

TEST(Kernels, BatchNamesInvertedCell) {
  auto cells = jittered_cells(4);
  cells[2] = HexCell::affine({Vec3{-1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}, {0, 0, 0});
  const QuadratureRule r = build_rule(RuleId::rule1);
  for (auto* kernel : {&kernels::integrate_cells_serial, &kernels::integrate_cells_parallel}) {
    try {
      (*kernel)(r, cells, Polynomial3::monomial({0, 0, 0}));
      FAIL() << "expected InvertedCellError";
    } catch (const InvertedCellError& e) {
      EXPECT_NE(std::string(e.what()).find("cell 2"), std::string::npos) << e.what();
    }
  }
}

TEST(Kernels, CompensatedTotal) {
  const std::vector<double> v{1.0, 1e100, 1.0, -1e100};
  EXPECT_EQ(kernels::total(v, kernels::Summation::compensated), 2.0);
  EXPECT_EQ(kernels::total(v, kernels::Summation::naive), 0.0);
  EXPECT_EQ(kernels::total(std::vector<double>{}), 0.0);
}

}  // namespace
}  // namespace stroud
