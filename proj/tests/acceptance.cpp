// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <algorithm>
#include <iostream>
#include <random>
#include <sstream>

#include "gauss_legendre.hpp"
#include "reference_tables.hpp"
#include "stroud/cli.hpp"
#include "stroud/hex_cell.hpp"
#include "stroud/oracle.hpp"
#include "stroud/report.hpp"
#include "stroud/residuals.hpp"

namespace {

using namespace stroud;

constexpr double kRuntimeLimitSeconds = 1.0;
constexpr double kExactnessTolerance = 1e-14;
constexpr double kDegree6Threshold = 1e-3;
constexpr double kRule1Degree6RelError = 0.0771373;
constexpr double kRule1Degree6Slack = 1e-6;
constexpr double kOracleRelTolerance = 1e-12;
constexpr double kBranchTableTolerance = 1e-9;
constexpr double kWeightSumUlps = 2.0;
constexpr double kRule2MaxMagnitude = 1.0146309695;
constexpr double kRule2MagnitudeSlack = 1e-10;
constexpr int kSignCheckDigits = 32;
constexpr int kResidualDigits = 64;
constexpr const char* kResidualBound = "1E-50";
constexpr double kUnitCellTolerance = 1e-14;
constexpr double kAffineTolerance = 1e-12;
constexpr int kAffineTrials = 200;

const std::array<RuleId, 2> kRules{RuleId::rule1, RuleId::rule2};

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

double rel(double value, double reference) {
  return std::abs(value - reference) / std::max(1.0, std::abs(reference));
}

std::string name(RuleId id) { return to_string(id); }

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

// 1. Table reproduction through the command-line entry point.
Outcome table_reproduction() {
  Outcome o;
  for (RuleId id : kRules) {
    const std::string rule = id == RuleId::rule1 ? "1" : "2";
    const std::array<const char*, 6> argv{"stroud13", "emit", "--rule", rule.c_str(), "--digits", "32"};
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    o.require(code == 0, "emit exit code " + std::to_string(code));
    const auto& table = id == RuleId::rule1 ? testing::kRule1Table : testing::kRule2Table;
    std::map<std::string, std::string> rows;
    std::istringstream lines(out.str());
    for (std::string symbol, value; lines >> symbol;) {
      if (std::find(testing::kSymbols.begin(), testing::kSymbols.end(), symbol) != testing::kSymbols.end() &&
          lines >> value && !rows.contains(symbol)) {
        rows[symbol] = value;
      }
    }
    for (std::size_t k = 0; k < table.size(); ++k) {
      const std::string symbol(testing::kSymbols[k]);
      o.require(rows[symbol] == table[k], name(id) + " " + symbol + " = '" + rows[symbol] + "'");
    }
  }
  return o;
}

// 2. Degree-5 exactness and the degree-6 failure.
Outcome degree5_exactness() {
  Outcome o;
  for (RuleId id : kRules) {
    const ExactnessReport r = verify_exactness(build_rule(id), 5, kExactnessTolerance);
    o.require(r.degree5_total == 56 && r.degree5_passed == 56,
              name(id) + " " + std::to_string(r.degree5_passed) + "/" + std::to_string(r.degree5_total));
    o.require(r.max_rel_error_degree5 <= kExactnessTolerance, name(id) + " max rel " + sci(r.max_rel_error_degree5));
    o.require(r.degree6_witness && r.degree6_witness->exponent == MonomialExponent{6, 0, 0} &&
                  r.degree6_witness->rel_error > kDegree6Threshold,
              name(id) + " (6,0,0) witness");
  }
  // Independent summation of the sixth moment from the published 33-digit strings.
  const auto v = [](std::string_view s) { return PrecisionDecimal::parse(s).to_rational(); };
  const auto& t = testing::kRule1Table;
  const auto p6 = [](const mpq_class& q) { return mpq_class(q * q * q * q * q * q); };
  const mpq_class sum = 2 * v(t[6]) * (p6(v(t[1])) + 2 * p6(v(t[2]))) + 2 * v(t[7]) * (2 * p6(v(t[3])) + p6(v(t[4])));
  const double independent = std::abs(sum.get_d() - 8.0 / 7.0) / (8.0 / 7.0);
  const ExactnessReport r1 = verify_exactness(build_rule(RuleId::rule1));
  o.require(std::abs(independent - kRule1Degree6RelError) <= kRule1Degree6Slack, "independent x^6 error " + sci(independent));
  o.require(std::abs(r1.degree6_witness->rel_error - independent) <= kRule1Degree6Slack,
            "rule1 x^6 error " + sci(r1.degree6_witness->rel_error));
  return o;
}

// 3. Exact zeros of the quartics and the m1/m2 identities in the tower.
Outcome exact_field_zeroes() {
  Outcome o;
  const auto px = x_octic_in_square();
  const auto py = y_octic_in_square();
  for (RuleId id : kRules) {
    const ParameterSet p = parameter_set(id);
    const TowerElement zero(branch_of(id));
    o.require(px.evaluate(p.lambda_sq) == zero && px.evaluate(p.gamma_sq) == zero, name(id) + " x quartic");
    o.require(py.evaluate(p.xi_sq) == zero && py.evaluate(p.mu_sq) == zero, name(id) + " y quartic");
    o.require(residual::m1_from_squares(p.lambda_sq, p.xi_sq) == zero, name(id) + " m1(lambda,xi)");
    o.require(residual::m1_from_squares(p.gamma_sq, p.mu_sq) == zero, name(id) + " m1(gamma,mu)");
    const TowerElement thirty_two(branch_of(id), 32);
    o.require(residual::m2_from_squares(p.lambda_sq, p.xi_sq) * (Rational(2) * p.B) == thirty_two, name(id) + " m2 B");
    o.require(residual::m2_from_squares(p.gamma_sq, p.mu_sq) * (Rational(2) * p.C) == thirty_two, name(id) + " m2 C");
  }
  return o;
}

// 4. Numerical re-derivation against the closed forms and the branch table.
Outcome oracle_agreement() {
  Outcome o;
  const oracle::Derivation d = oracle::derive_all(kOracleRelTolerance);
  for (RuleId id : kRules) {
    const SignedParameters s = signed_parameters(id);
    const RuleWeights w = weights(id);
    const oracle::SignedRule& r = id == RuleId::rule1 ? d.rule1 : d.rule2;
    const std::array<std::pair<double, double>, 7> pairs{{{r.lambda, s.lambda}, {r.xi, s.xi}, {r.mu, s.mu},
                                                          {r.gamma, s.gamma}, {d.A, w.A}, {r.B, w.B}, {r.C, w.C}}};
    double worst = 0.0;
    for (const auto& [derived, closed] : pairs) worst = std::max(worst, rel(derived, closed));
    o.require(worst <= kOracleRelTolerance, name(id) + " max rel " + sci(worst));
  }
  double worst_table = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& s = d.solutions[i];
    worst_table = std::max({worst_table, std::abs(std::sqrt(s.x_sq) - testing::kBranchX[i]),
                            std::abs(std::sqrt(s.y_sq) - testing::kBranchY[i]), std::abs(s.w - testing::kBranchW[i])});
  }
  o.require(worst_table <= kBranchTableTolerance, "branch table max abs " + sci(worst_table));
  return o;
}

// 5. Point count, weights, symmetry, orbit closure, containment.
Outcome structural_invariants() {
  Outcome o;
  for (RuleId id : kRules) {
    const QuadratureRule r = build_rule(id);
    o.require(r.size() == 13, name(id) + " size");
    double sum = 0.0;
    for (const auto& p : r.points) {
      o.require(p.weight > 0.0, name(id) + " non-positive weight");
      sum += p.weight;
    }
    const double ulp = std::nextafter(8.0, 9.0) - 8.0;
    o.require(std::abs(sum - 8.0) <= kWeightSumUlps * ulp, name(id) + " double weight sum");
    const ParameterSet& e = r.provenance;
    o.require(e.A + Rational(6) * e.B + Rational(6) * e.C == TowerElement(branch_of(id), 8), name(id) + " exact weight sum");
    const auto has = [&](const Vec3& x, double w) {
      return std::any_of(r.points.begin(), r.points.end(), [&](const QuadraturePoint& q) { return q.xyz == x && q.weight == w; });
    };
    for (const auto& p : r.points) {
      const auto& x = p.xyz;
      o.require(has({-x[0], -x[1], -x[2]}, p.weight), name(id) + " central symmetry");
      for (const Vec3& y : {Vec3{x[1], x[2], x[0]}, Vec3{x[2], x[0], x[1]}, Vec3{x[1], x[0], x[2]},
                            Vec3{x[0], x[2], x[1]}, Vec3{x[2], x[1], x[0]}}) {
        o.require(has(y, p.weight), name(id) + " orbit closure");
      }
    }
  }
  const ContainmentReport c1 = containment_report(build_rule(RuleId::rule1));
  const ContainmentReport c2 = containment_report(build_rule(RuleId::rule2));
  o.require(c1.all_inside, "rule1 containment");
  o.require(!c2.all_inside && std::abs(c2.max_coordinate_magnitude - kRule2MaxMagnitude) <= kRule2MagnitudeSlack,
            "rule2 containment max " + sci(c2.max_coordinate_magnitude));
  return o;
}

// 6. The quartic part of m5 is +19, and the full m5 residual vanishes.
Outcome sign_anomaly() {
  Outcome o;
  const PrecisionDecimal bound = PrecisionDecimal::parse(kResidualBound);
  for (RuleId id : kRules) {
    const HighPrecisionCheck at32 = high_precision_check(id, kSignCheckDigits);
    o.require(at32.quartic_part_is_plus_19(), name(id) + " quartic part at 32 digits = " + at32.m5_quartic_part.scientific(5));
    const HighPrecisionCheck at64 = high_precision_check(id, kResidualDigits);
    o.require(abs(at64.m5) <= bound, name(id) + " m5 at 64 digits = " + at64.m5.scientific(3));
    o.require(abs(at64.m5_quartic_part - PrecisionDecimal(19)) <= bound, name(id) + " quartic part at 64 digits");
  }
  const std::string text = build_derivation_report().text();
  o.require(text.find("carries the wrong sign") != std::string::npos && text.find("(confirmed)") != std::string::npos,
            "report note");
  return o;
}

// 7. Integration over mapped cells.
Outcome mapped_integration() {
  Outcome o;
  const auto one = [](double, double, double) { return 1.0; };
  std::mt19937 rng(20240611);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (RuleId id : kRules) {
    const QuadratureRule r = build_rule(id);
    const double unit = integrate_over_hex(r, HexCell::box({0, 0, 0}, {1, 1, 1}), one);
    const double big = integrate_over_hex(r, HexCell::box({-2, -2, -2}, {2, 2, 2}), one);
    o.require(std::abs(unit - 1.0) <= kUnitCellTolerance, name(id) + " [0,1]^3 = " + sci(unit));
    o.require(std::abs(big - 64.0) / 64.0 <= kUnitCellTolerance, name(id) + " [-2,2]^3 = " + sci(big));
    double worst = 0.0;
    for (int trial = 0; trial < kAffineTrials; ++trial) {
      Mat3 a{};
      do {
        for (auto& row : a)
          for (auto& x : row) x = u(rng);
      } while (std::abs(determinant(a)) < 0.05);
      if (determinant(a) < 0) std::swap(a[0], a[1]);
      const Vec3 b{u(rng), u(rng), u(rng)};
      Polynomial3 p;
      for (const auto& e : monomials_up_to(5)) p.add_term(e, u(rng));
      const auto image = [&](double x, double y, double z) {
        Vec3 out{};
        for (std::size_t i = 0; i < 3; ++i) out[i] = a[i][0] * x + a[i][1] * y + a[i][2] * z + b[i];
        return out;
      };
      const double reference =
          determinant(a) * testing::gauss_legendre_3x3x3([&](double x, double y, double z) { return p.evaluate(image(x, y, z)); });
      worst = std::max(worst, rel(integrate_over_hex(r, HexCell::affine(a, b), p), reference));
    }
    o.require(worst <= kAffineTolerance, name(id) + " affine degree-5 max rel " + sci(worst));
  }
  return o;
}

struct Criterion {
  int number;
  const char* name;
  std::function<Outcome()> check;
  bool timed;
};

}  // namespace

int main() {
  const std::array<Criterion, 7> criteria{{
      {1, "table reproduction", table_reproduction, true},
      {2, "degree-5 exactness", degree5_exactness, true},
      {3, "exact-field zeroes", exact_field_zeroes, true},
      {4, "oracle agreement", oracle_agreement, true},
      {5, "structural invariants", structural_invariants, false},
      {6, "sign-anomaly documentation", sign_anomaly, false},
      {7, "mapped integration", mapped_integration, false},
  }};
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.timed) o.require(seconds < kRuntimeLimitSeconds, "runtime " + sci(seconds) + " s");
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.number << ". " << c.name << "  (" << std::fixed
              << std::setprecision(1) << seconds * 1e3 << " ms)";
    std::cout.unsetf(std::ios::floatfield);
    if (!o.pass) std::cout << "  " << o.detail;
    std::cout << '\n';
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
